#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlink/braid.hpp"
#include "braidlink/halftwist.hpp"

namespace braidlink {

enum class SingularityKind { branch, node, node_at_infinity, cusp, tangency, multi_point };

struct SingularityType {
    SingularityKind kind = SingularityKind::node;
    int multiplicity = 2;  // lines through a multi_point
};
// Degree the singularity contributes to the factorization product:
// branch 1, node 2, cusp 3, tangency 4, k-fold point 2.
int monodromy_exponent(const SingularityType& t);

SingularityKind singularity_kind_from_string(const std::string& s);
std::string to_string(SingularityKind k);

struct Singularity {
    std::string label;
    SingularityType type;
    std::vector<std::string> incident;  // labels of the components meeting here
    HalfTwistExpr expr;
};

struct CurveComponent {
    std::string kind;  // "line" or "conic"
    std::string label;
};

// An arrangement together with its braid monodromy table: one half-twist
// expression per singularity, listed in the order the factors are emitted.
struct Configuration {
    std::string name;
    std::vector<CurveComponent> components;
    std::vector<Singularity> singularities;
    int strands = 0;  // 0: derived (1 per line, 2 per conic)
};
int configuration_strands(const Configuration& c);

struct Factorization {
    int strands = 1;
    std::vector<std::pair<std::string, BraidWord>> factors;
};

// Compiles the table.  Points at infinity are part of the table but not of
// the local contribution; pass include_infinity to keep them.
Factorization factorization_of(const Configuration& c, bool include_infinity = false);

// Factors multiplied left to right in singularity order, free-reduced.
BraidWord table_product(const Factorization& f);

// One node factor per line pair, in the order (1,2), (1,3), (2,3), (1,4), ...
// The product is the full twist on m strands.
Factorization generic_line_factorization(int m);
// (s1 ... s_{m-1})^m
BraidWord full_twist(int m);

enum class NodeRegenMode { first, second, both };
// The doubled node factor: the strands of i (mode first), of j (second) or
// of both (both) are replaced by their pairs 2i-1, 2i.  Expand with
// pair_expand to get the plain node factors.
HalfTwistExpr regenerate_node(int i, int j, NodeRegenMode mode, int strands);

enum class TangencySide { left, right };
// The three cusp factors replacing a tangency between components i < j.
// side == left doubles j (factors conjugated by Z_{jj'}), side == right
// doubles i.
std::vector<HalfTwistExpr> regenerate_tangency(int i, int j, TangencySide side, int strands);

enum class TwoPointCase { A, B };
enum class ThreePointCase { A, B, C };

// Complete regeneration of a 2-point on 4 strands: three cusps, one branch
// point.  Case A has the conic on the lower strand pair, case B on the upper.
Factorization two_point_factorization(TwoPointCase c);
// The simplified 10-letter products the factorizations multiply to.
BraidWord two_point_product(TwoPointCase c);

// Complete regeneration of a 3-point with one diagonal, on 6 strands; the
// case records where the diagonal falls in the line order (A last, B middle,
// C first).
Factorization three_point_type1_factorization(ThreePointCase c);
// Stated positive length-27 products for cases A and B; case C is checked by
// rotation against A.
std::optional<BraidWord> three_point_type1_product(ThreePointCase c);

// Complete regeneration of a 3-point with two diagonals, on 6 strands.
Factorization three_point_type2_factorization();
BraidWord three_point_type2_product();  // the stated positive length-28 word

struct BuiltinExample {
    Configuration config;
    std::optional<BraidWord> stated_product;
};
const std::vector<std::string>& builtin_names();
const BuiltinExample& builtin(const std::string& name);

// Degeneration diagrams: lattice vertices joined by tagged edges.  Only the
// separating lines are listed; the outer boundary is not part of the branch
// curve.
enum class EdgeKind { horizontal, vertical, diagonal };
struct DiagramEdge {
    int a = 0, b = 0;  // indices into vertices
    EdgeKind kind = EdgeKind::horizontal;
};
struct DegenerationDiagram {
    std::vector<std::pair<int, int>> vertices;  // (x, y)
    std::vector<DiagramEdge> edges;
};

// Vertex ids sorted bottom-to-top, left-to-right (by y, then x).
std::vector<int> lex_order_vertices(const DegenerationDiagram& d);
// Edge ids sorted by (upper endpoint, lower endpoint) in the vertex order.
std::vector<int> lex_order_lines(const DegenerationDiagram& d,
                                 const std::vector<int>& vertex_order);

enum class KPointType { one_point, two_point, three_point_type1, three_point_type2, higher };
struct KPoint {
    int vertex = 0;
    int count = 0;
    KPointType type = KPointType::one_point;
};
// One entry per vertex with at least one edge.  A 3-point must have exactly
// one or two diagonals; k >= 4 is reported as `higher`.
std::vector<KPoint> classify_k_points(const DegenerationDiagram& d);

struct DiagramRegeneration {
    KPoint point;
    std::string variant;  // "A"/"B"/"C" for the ordered cases, "nodes" for a
                          // diagonal-free 2-point
    Factorization local;
};
// Local regenerated factorization for every 2- and 3-point of the diagram,
// in lexicographic vertex order.  Throws unsupported_feature if any vertex
// has four or more edges.
std::vector<DiagramRegeneration> regenerate_diagram(const DegenerationDiagram& d);

}  // namespace braidlink
