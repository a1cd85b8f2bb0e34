#include "locus/construction.hpp"

#include "locus/errors.hpp"

namespace locus {

ContextPtr ambient_context() {
    static ContextPtr ctx = make_context(
        {{"x", VariableRole::Dependent}, {"y", VariableRole::Dependent}});
    return ctx;
}

const char* element_kind_name(const ElementData& data) {
    struct Visitor {
        const char* operator()(const FreePointEl&) const { return "FreePoint"; }
        const char* operator()(const MidpointEl&) const { return "Midpoint"; }
        const char* operator()(const PointOnCircleEl&) const { return "PointOnCircle"; }
        const char* operator()(const PointOnLineEl&) const { return "PointOnLine"; }
        const char* operator()(const PointOnCurveEl&) const { return "PointOnCurve"; }
        const char* operator()(const SegmentEl&) const { return "Segment"; }
        const char* operator()(const LineTwoPointsEl&) const { return "LineTwoPoints"; }
        const char* operator()(const ParallelLineEl&) const { return "ParallelLine"; }
        const char* operator()(const OrthogonalLineEl&) const { return "OrthogonalLine"; }
        const char* operator()(const CircleCenterRadiusEl&) const { return "CircleCenterRadius"; }
        const char* operator()(const CircleCenterPointEl&) const { return "CircleCenterPoint"; }
        const char* operator()(const CircleCenterSegmentEl&) const {
            return "CircleCenterSegment";
        }
        const char* operator()(const IntersectEl&) const { return "Intersect"; }
        const char* operator()(const LocusEl&) const { return "Locus"; }
        const char* operator()(const BooleanRelationEl&) const { return "BooleanRelation"; }
    };
    return std::visit(Visitor{}, data);
}

bool is_point_element(const ElementData& data) {
    return std::holds_alternative<FreePointEl>(data) || std::holds_alternative<MidpointEl>(data) ||
           std::holds_alternative<PointOnCircleEl>(data) ||
           std::holds_alternative<PointOnLineEl>(data) ||
           std::holds_alternative<PointOnCurveEl>(data) ||
           std::holds_alternative<IntersectEl>(data);
}

bool is_line_like_element(const ElementData& data) {
    return std::holds_alternative<SegmentEl>(data) ||
           std::holds_alternative<LineTwoPointsEl>(data) ||
           std::holds_alternative<ParallelLineEl>(data) ||
           std::holds_alternative<OrthogonalLineEl>(data);
}

bool is_circle_element(const ElementData& data) {
    return std::holds_alternative<CircleCenterRadiusEl>(data) ||
           std::holds_alternative<CircleCenterPointEl>(data) ||
           std::holds_alternative<CircleCenterSegmentEl>(data);
}

bool is_path_element(const ElementData& data) {
    return is_line_like_element(data) || is_circle_element(data);
}

void Construction::add(GeoElement element) {
    if (element.name.empty()) throw InvalidArgument("element without a label");
    if (labels_.count(element.name))
        throw InvalidArgument("duplicate label: " + element.name);
    labels_[element.name] = elements_.size();
    elements_.push_back(std::move(element));
}

const GeoElement* Construction::find(const std::string& name) const {
    auto it = labels_.find(name);
    return it == labels_.end() ? nullptr : &elements_[it->second];
}

int Construction::index_of(const std::string& name) const {
    auto it = labels_.find(name);
    return it == labels_.end() ? -1 : static_cast<int>(it->second);
}

namespace {

class Validator {
public:
    explicit Validator(const Construction& c) : construction_(c) {}

    std::vector<Diagnostic> run() {
        const auto& elements = construction_.elements();
        for (index_ = 0; index_ < elements.size(); ++index_) {
            const GeoElement& el = elements[index_];
            std::visit([&](const auto& data) { check(el, data); }, el.data);
        }
        return std::move(diagnostics_);
    }

private:
    using Predicate = bool (*)(const ElementData&);

    const GeoElement* resolve(const GeoElement& el, const std::string& ref,
                              Predicate predicate, const char* expected) {
        int target = construction_.index_of(ref);
        if (target < 0 || static_cast<std::size_t>(target) >= index_) {
            diagnostics_.push_back({el.name, "undefined reference",
                                    "'" + ref + "' is not defined before '" + el.name + "'"});
            return nullptr;
        }
        const GeoElement& other = construction_.elements()[static_cast<std::size_t>(target)];
        if (predicate && !predicate(other.data)) {
            diagnostics_.push_back(
                {el.name, "incompatible kind",
                 "'" + ref + "' is a " + element_kind_name(other.data) + ", expected " +
                     expected});
            return nullptr;
        }
        return &other;
    }

    void check(const GeoElement&, const FreePointEl&) {}

    void check(const GeoElement& el, const MidpointEl& d) {
        resolve(el, d.a, is_point_element, "a point");
        resolve(el, d.b, is_point_element, "a point");
    }

    void check(const GeoElement& el, const PointOnCircleEl& d) {
        resolve(el, d.circle, is_circle_element, "a circle");
    }

    void check(const GeoElement& el, const PointOnLineEl& d) {
        resolve(el, d.line, is_line_like_element, "a line");
    }

    void check(const GeoElement&, const PointOnCurveEl&) {}

    void check(const GeoElement& el, const SegmentEl& d) {
        resolve(el, d.a, is_point_element, "a point");
        resolve(el, d.b, is_point_element, "a point");
    }

    void check(const GeoElement& el, const LineTwoPointsEl& d) {
        resolve(el, d.a, is_point_element, "a point");
        resolve(el, d.b, is_point_element, "a point");
    }

    void check(const GeoElement& el, const ParallelLineEl& d) {
        resolve(el, d.point, is_point_element, "a point");
        resolve(el, d.line, is_line_like_element, "a line");
    }

    void check(const GeoElement& el, const OrthogonalLineEl& d) {
        resolve(el, d.point, is_point_element, "a point");
        resolve(el, d.line, is_line_like_element, "a line");
    }

    void check(const GeoElement& el, const CircleCenterRadiusEl& d) {
        resolve(el, d.center, is_point_element, "a point");
        if (d.radius == 0)
            diagnostics_.push_back({el.name, "degenerate circle", "radius is zero"});
    }

    void check(const GeoElement& el, const CircleCenterPointEl& d) {
        resolve(el, d.center, is_point_element, "a point");
        resolve(el, d.through, is_point_element, "a point");
    }

    void check(const GeoElement& el, const CircleCenterSegmentEl& d) {
        resolve(el, d.center, is_point_element, "a point");
        resolve(el, d.segment,
                [](const ElementData& x) { return std::holds_alternative<SegmentEl>(x); },
                "a segment");
    }

    void check(const GeoElement& el, const IntersectEl& d) {
        resolve(el, d.a, is_path_element, "a line or circle");
        resolve(el, d.b, is_path_element, "a line or circle");
    }

    void check(const GeoElement& el, const LocusEl& d) {
        resolve(el, d.tracer, is_point_element, "a point");
        const GeoElement* mover = resolve(el, d.mover, is_point_element, "a point");
        if (mover && !(std::holds_alternative<PointOnCircleEl>(mover->data) ||
                       std::holds_alternative<PointOnLineEl>(mover->data) ||
                       std::holds_alternative<PointOnCurveEl>(mover->data))) {
            diagnostics_.push_back({el.name, "unbound mover",
                                    "mover '" + d.mover +
                                        "' must be bound to a 1-dimensional object"});
        }
        if (mover && d.mover == d.tracer)
            diagnostics_.push_back({el.name, "degenerate locus", "tracer equals mover"});
    }

    void check(const GeoElement& el, const BooleanRelationEl& d) {
        resolve(el, d.a, is_line_like_element, "a line");
        resolve(el, d.b, is_line_like_element, "a line");
    }

    const Construction& construction_;
    std::size_t index_ = 0;
    std::vector<Diagnostic> diagnostics_;
};

} // namespace

std::vector<Diagnostic> validate(const Construction& construction) {
    return Validator(construction).run();
}

} // namespace locus
