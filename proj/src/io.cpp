#include "ordalg/io.hpp"

#include <fstream>
#include <sstream>

namespace ordalg {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError("expected a decimal string, got " + j.dump());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InputError("expected an integer string, got " + j.dump());
}

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  RatVector v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json to_json(const Int& x) { return to_string(x); }
Json to_json(const Rat& x) { return to_string(x); }

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

OrderDocument parse_order_document(const std::string& text) {
  Json j = parse_json(text);
  if (!j.is_object()) throw InputError("order document must be a JSON object");
  if (!j.contains("rank") || !j.contains("table")) throw InputError("order document needs \"rank\" and \"table\"");
  Int rank = int_from_json(j["rank"]);
  if (rank < 1 || rank > 4096) throw InputError("rank must be between 1 and 4096");
  const std::size_t n = rank.get_ui();
  const Json& t = j["table"];
  if (!t.is_array() || t.size() != n * n * n)
    throw InputError("table must be a flat array of rank^3 = " + std::to_string(n * n * n) + " entries");
  std::vector<Int> table;
  table.reserve(t.size());
  for (const auto& x : t) table.push_back(int_from_json(x));
  OrderDocument doc;
  doc.order = Order::from_table(n, std::move(table));
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || l.size() != n) throw InputError("labels must be an array of rank strings");
    for (const auto& x : l) {
      if (!x.is_string()) throw InputError("labels must be strings");
      doc.labels.push_back(x.get<std::string>());
    }
  }
  return doc;
}

OrderDocument read_order_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_order_document(ss.str());
}

std::string serialize_order_document(const OrderDocument& doc) {
  Json j;
  j["rank"] = std::to_string(doc.order.rank());
  Json t = Json::array();
  for (const auto& x : doc.order.table()) t.push_back(to_string(x));
  j["table"] = std::move(t);
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j.dump(2) + "\n";
}

OrderDocument document_from_poly(const IntVector& f) {
  OrderDocument doc;
  doc.order = Order::from_poly(f);
  for (std::size_t i = 0; i < doc.order.rank(); ++i)
    doc.labels.push_back(i == 0 ? "1" : i == 1 ? "X" : "X^" + std::to_string(i));
  return doc;
}

}  // namespace ordalg
