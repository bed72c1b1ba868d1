#ifndef ORDALG_IO_HPP_
#define ORDALG_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordalg/order.hpp"

namespace ordalg {

using Json = nlohmann::ordered_json;

/// {"rank": "n", "table": [n^3 decimal strings, (i, j, k) row-major],
///  "labels": [...] (optional)}
struct OrderDocument {
  Order order;
  std::vector<std::string> labels;
};

/// Throws InputError on malformed JSON, wrong shapes, non-integers, or
/// structure constants that do not define an order.
OrderDocument parse_order_document(const std::string& text);
OrderDocument read_order_document(const std::string& path);
/// Canonical form: two-space indentation, trailing newline.
std::string serialize_order_document(const OrderDocument& doc);

/// Z[X]/(f) with labels 1, X, X^2, ...
OrderDocument document_from_poly(const IntVector& f);

Json to_json(const Int& x);
Json to_json(const Rat& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);
/// Rows of the matrix.
Json to_json(const IntMatrix& m);

/// Accepts decimal strings (integers or p/q) and JSON integers.
Rat rat_from_json(const Json& j);
Int int_from_json(const Json& j);
RatVector rat_vector_from_json(const Json& j);
/// Parses JSON text; throws InputError.
Json parse_json(const std::string& text);

}  // namespace ordalg

#endif  // ORDALG_IO_HPP_
