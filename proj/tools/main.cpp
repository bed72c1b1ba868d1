#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordalg/commands.hpp"

using namespace ordalg;

namespace {

// 0 silences the summary line, 2 or more adds the command name and timing.
int verbosity() {
  const char* v = std::getenv("ORDALG_VERBOSE");
  if (v == nullptr || *v == '\0') return 1;
  return std::atoi(v);
}

IntVector parse_coeffs(const std::string& s) {
  IntVector f;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) f.push_back(parse_int(item));
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Idempotents, roots of unity and graphs of orders given by structure constants"};
  app.require_subcommand(1);
  bool naive_lift = false;
  app.add_flag("--naive-lift", naive_lift, "Use the pair enumeration instead of p-th root lifting");

  std::string file, targets, element, coeffs;
  std::optional<std::string> prime;

  auto* idem = app.add_subcommand("idempotents", "Primitive idempotents");
  idem->add_option("file", file, "Order document")->required();
  auto* units = app.add_subcommand("units", "Roots of unity: generators, relations, invariant factors");
  units->add_option("file", file, "Order document")->required();
  auto* dlog = app.add_subcommand("dlog", "Decide membership of an element in <targets> inside mu(E)");
  dlog->add_option("file", file, "Order document")->required();
  dlog->add_option("--targets", targets, "JSON array of coordinate vectors")->required();
  dlog->add_option("--element", element, "JSON coordinate vector")->required();
  auto* graph = app.add_subcommand("graph", "Weighted graph of the separable part, or of C at a prime");
  graph->add_option("file", file, "Order document")->required();
  graph->add_option("--prime", prime, "Prime p: report the graph of C");
  auto* dec = app.add_subcommand("decompose", "Components of Spec(E) and tower indices");
  dec->add_option("file", file, "Order document")->required();
  auto* from_poly = app.add_subcommand("from-poly", "Order document for Z[X]/(f)");
  from_poly->add_option("--coeffs", coeffs, "Comma separated coefficients, constant term first")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const int verbose = verbosity();
  const auto start = std::chrono::steady_clock::now();
  try {
    CommandResult r;
    if (from_poly->parsed()) {
      OrderDocument doc = document_from_poly(parse_coeffs(coeffs));
      std::cout << serialize_order_document(doc);
      r.summary = "rank " + std::to_string(doc.order.rank());
    } else {
      Order a = read_order_document(file).order;
      if (idem->parsed()) {
        r = cmd_idempotents(a);
      } else if (units->parsed()) {
        r = cmd_units(a, naive_lift);
      } else if (dlog->parsed()) {
        r = cmd_dlog(a, parse_json(targets), parse_json(element));
      } else if (graph->parsed()) {
        r = cmd_graph(a, prime ? std::optional<Int>(parse_int(*prime)) : std::nullopt);
      } else if (dec->parsed()) {
        r = cmd_decompose(a);
      }
      std::cout << r.output.dump(2) << "\n";
    }
    if (verbose >= 1) std::cerr << r.summary << "\n";
    if (verbose >= 2) {
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      std::cerr << app.get_subcommands().front()->get_name() << ": " << dt.count() << " s\n";
    }
    return r.status;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
