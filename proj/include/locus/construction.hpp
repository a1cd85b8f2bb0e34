#pragma once

#include "locus/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace locus {

// Context {x, y} in which implicit-curve equations are written.
ContextPtr ambient_context();

struct FreePointEl {
    std::optional<std::pair<Rational, Rational>> coords;
    bool operator==(const FreePointEl&) const = default;
};
struct MidpointEl {
    std::string a, b;
    bool operator==(const MidpointEl&) const = default;
};
struct PointOnCircleEl {
    std::string circle;
    bool operator==(const PointOnCircleEl&) const = default;
};
struct PointOnLineEl {
    std::string line;
    bool operator==(const PointOnLineEl&) const = default;
};
struct PointOnCurveEl {
    Polynomial curve; // over ambient_context()
    bool operator==(const PointOnCurveEl&) const = default;
};
struct SegmentEl {
    std::string a, b;
    bool operator==(const SegmentEl&) const = default;
};
struct LineTwoPointsEl {
    std::string a, b;
    bool operator==(const LineTwoPointsEl&) const = default;
};
struct ParallelLineEl {
    std::string point, line;
    bool operator==(const ParallelLineEl&) const = default;
};
struct OrthogonalLineEl {
    std::string point, line;
    bool operator==(const OrthogonalLineEl&) const = default;
};
struct CircleCenterRadiusEl {
    std::string center;
    Rational radius;
    bool operator==(const CircleCenterRadiusEl&) const = default;
};
struct CircleCenterPointEl {
    std::string center, through;
    bool operator==(const CircleCenterPointEl&) const = default;
};
struct CircleCenterSegmentEl {
    std::string center, segment;
    bool operator==(const CircleCenterSegmentEl&) const = default;
};
struct IntersectEl {
    std::string a, b;
    int branch = 0;
    bool operator==(const IntersectEl&) const = default;
};
struct LocusEl {
    std::string tracer, mover;
    bool operator==(const LocusEl&) const = default;
};
enum class RelationKind { Parallel, Perpendicular };
struct BooleanRelationEl {
    RelationKind kind;
    std::string a, b;
    bool operator==(const BooleanRelationEl&) const = default;
};

using ElementData =
    std::variant<FreePointEl, MidpointEl, PointOnCircleEl, PointOnLineEl, PointOnCurveEl,
                 SegmentEl, LineTwoPointsEl, ParallelLineEl, OrthogonalLineEl,
                 CircleCenterRadiusEl, CircleCenterPointEl, CircleCenterSegmentEl,
                 IntersectEl, LocusEl, BooleanRelationEl>;

struct GeoElement {
    std::string name;
    ElementData data;
    // Initial numeric instance from the source document, used only for the
    // default plot viewport.
    std::optional<std::pair<double, double>> plot_hint;

    bool operator==(const GeoElement& other) const {
        return name == other.name && data == other.data;
    }
};

const char* element_kind_name(const ElementData& data);
bool is_point_element(const ElementData& data);
bool is_line_like_element(const ElementData& data); // carries a direction
bool is_circle_element(const ElementData& data);
// One-dimensional object an Intersect operand can be.
bool is_path_element(const ElementData& data);

// Ordered sequence of elements; labels unique, definition before use.
class Construction {
public:
    // Throws InvalidArgument on a duplicate label.
    void add(GeoElement element);

    const std::vector<GeoElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    const GeoElement* find(const std::string& name) const;
    // Index of a label, -1 when absent.
    int index_of(const std::string& name) const;

    bool operator==(const Construction& other) const { return elements_ == other.elements_; }

private:
    std::vector<GeoElement> elements_;
    std::map<std::string, std::size_t> labels_;
};

struct Diagnostic {
    std::string element;
    std::string rule;
    std::string message;
};

// Empty iff all structural invariants hold.
std::vector<Diagnostic> validate(const Construction& construction);

} // namespace locus
