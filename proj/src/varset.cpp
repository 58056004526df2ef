#include <hornred/varset.hpp>

#include <set>
#include <sstream>

#include <hornred/errors.hpp>

namespace hornred {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string_view> seen;
    for (const auto &n : names_) {
        if (n.empty())
            throw DomainError("variable names must be nonempty");
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name '" + n + "'");
    }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t VarSet::index_of(std::string_view name) const {
    if (auto i = find(name))
        return *i;
    std::ostringstream msg;
    msg << "unknown variable '" << name << "' (context has:";
    for (const auto &n : names_)
        msg << ' ' << n;
    msg << ')';
    throw DomainError(msg.str());
}

bool same_vars(const VarSetPtr &a, const VarSetPtr &b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

void require_same_vars(const VarSetPtr &a, const VarSetPtr &b, const char *where) {
    if (!same_vars(a, b))
        throw DomainError(std::string(where) + ": operands use different variable sets");
}

} // namespace hornred
