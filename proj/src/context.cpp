#include "locus/context.hpp"

#include "locus/errors.hpp"

namespace locus {

const char* role_name(VariableRole role) {
    switch (role) {
    case VariableRole::FreeParameter: return "free-parameter";
    case VariableRole::Dependent: return "dependent";
    case VariableRole::Tracer: return "tracer";
    case VariableRole::Slack: return "slack";
    }
    return "?";
}

VariableContext::VariableContext(std::vector<std::pair<std::string, VariableRole>> vars) {
    names_.reserve(vars.size());
    roles_.reserve(vars.size());
    for (auto& [name, role] : vars) {
        if (name.empty()) throw InvalidArgument("empty variable name");
        if (index_.count(name)) throw InvalidArgument("duplicate variable name: " + name);
        index_[name] = static_cast<int>(names_.size());
        names_.push_back(std::move(name));
        roles_.push_back(role);
    }
}

int VariableContext::index_of(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> VariableContext::indices_with_role(VariableRole role) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < roles_.size(); ++i)
        if (roles_[i] == role) out.push_back(static_cast<int>(i));
    return out;
}

ContextPtr make_context(std::vector<std::pair<std::string, VariableRole>> vars) {
    return std::make_shared<const VariableContext>(std::move(vars));
}

ContextPtr merge_contexts(const ContextPtr& a, const ContextPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (same_context(a, b)) return a;
    std::vector<std::pair<std::string, VariableRole>> vars;
    vars.reserve(a->size() + b->size());
    for (std::size_t i = 0; i < a->size(); ++i)
        vars.emplace_back(a->name(i), a->role(i));
    for (std::size_t i = 0; i < b->size(); ++i) {
        int j = a->index_of(b->name(i));
        if (j >= 0) {
            if (a->role(static_cast<std::size_t>(j)) != b->role(i))
                throw InvalidArgument("conflicting role for variable '" + b->name(i) +
                                      "' while merging contexts");
            continue;
        }
        vars.emplace_back(b->name(i), b->role(i));
    }
    return make_context(std::move(vars));
}

} // namespace locus
