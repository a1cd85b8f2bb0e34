#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace locus {

enum class VariableRole {
    FreeParameter, // the u_i: generic coordinates of free points
    Dependent,     // the x_j: coordinates of bound points (incl. the mover)
    Tracer,        // locus-point coordinates
    Slack,         // auxiliary inversion variable of a saturation
};

const char* role_name(VariableRole role);

// Ordered set of named variables with roles. Immutable once built; shared
// by every polynomial over it.
class VariableContext {
public:
    VariableContext() = default;
    explicit VariableContext(std::vector<std::pair<std::string, VariableRole>> vars);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    VariableRole role(std::size_t i) const { return roles_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    // -1 when absent.
    int index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) >= 0; }

    std::vector<int> indices_with_role(VariableRole role) const;

    bool operator==(const VariableContext& other) const {
        return names_ == other.names_ && roles_ == other.roles_;
    }

private:
    std::vector<std::string> names_;
    std::vector<VariableRole> roles_;
    std::map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::pair<std::string, VariableRole>> vars);

// Union of the two contexts (left order first, then unseen right names).
// Throws InvalidArgument when a shared name carries two different roles.
ContextPtr merge_contexts(const ContextPtr& a, const ContextPtr& b);

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace locus
