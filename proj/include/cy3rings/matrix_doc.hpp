#ifndef CY3RINGS_MATRIX_DOC_HPP
#define CY3RINGS_MATRIX_DOC_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cy3rings/pfaffian.hpp"

namespace cy3 {

/// Parsed form of the matrix/ideal text format:
///   var NAME WEIGHT
///   poly NAME = EXPR
///   matrix = [e12, e13, e14, e15; e23, e24, e25; e34, e35; e45]
///   ideal = GEN, GEN, ...
/// EXPR admits integers, names, + - * ^ and parentheses.  Lines starting
/// with '#' are comments.
struct MatrixDocument {
    RingPtr ring;
    std::map<std::string, SparsePoly> named;
    std::optional<SkewMatrix5> matrix;
    std::optional<TriangularIdeal> ideal;
};

MatrixDocument parse_matrix_document(std::string_view text);

/// Expression parser used for poly/matrix/ideal entries.
SparsePoly parse_poly_expr(std::string_view expr, const RingPtr& ring,
                           const std::map<std::string, SparsePoly>& named);

}  // namespace cy3

#endif
