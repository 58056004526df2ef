#ifndef HORNRED_VARSET_HPP
#define HORNRED_VARSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hornred {

// An ordered list of indeterminate names.  The order is significant: it fixes
// the monomial order of every polynomial built over the set (earlier names
// are more significant under graded lexicographic comparison).  Function
// contexts put the parameters first, in catalog order, followed by z1, z2.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string &name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string> &names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    // Like find() but throws DomainError naming the missing variable.
    std::size_t index_of(std::string_view name) const;

    bool operator==(const VarSet &other) const { return names_ == other.names_; }
    bool operator!=(const VarSet &other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

// True when both pointers refer to equal contents (identity is a fast path).
bool same_vars(const VarSetPtr &a, const VarSetPtr &b);

// Throws DomainError unless same_vars(a, b).
void require_same_vars(const VarSetPtr &a, const VarSetPtr &b, const char *where);

} // namespace hornred

#endif
