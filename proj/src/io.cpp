#include "bicm/io.hpp"

#include <json.hpp>

#include <sstream>

#include "bicm/facevec.hpp"
#include "bicm/homology.hpp"

namespace bicm {

using nlohmann::json;

SimplicialComplex parse_complex_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_n = false;
  int n = 0;
  std::vector<VertexSet> facets;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Trim.
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      std::string tag;
      ls >> tag >> n;
      if (tag != "n" || ls.fail() || n < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header 'n <integer>'");
      have_n = true;
      continue;
    }
    if (line == "empty") {
      facets.push_back(VertexSet());
      continue;
    }
    VertexSet f;
    int v;
    while (ls >> v) {
      if (v < 1 || v > n)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": vertex out of range");
      f.add(v);
    }
    if (!ls.eof())
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": malformed facet line");
    facets.push_back(f);
  }
  if (!have_n) throw std::invalid_argument("missing 'n <integer>' header");
  if (facets.empty()) throw std::invalid_argument("no facets given");
  return SimplicialComplex::from_facets(n, facets);
}

std::string serialize_complex_file(const SimplicialComplex& dl) {
  std::ostringstream os;
  os << "n " << dl.n() << "\n";
  for (VertexSet f : dl.facets()) {
    if (f.empty()) {
      os << "empty\n";
      continue;
    }
    bool first = true;
    for (int v : f.members()) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

json analysis_document(const SimplicialComplex& dl,
                       const std::vector<int>& characteristics, int k_max) {
  json doc;
  doc["schema"] = "bicm-report/1";
  ComplexProfile prof = profile(dl);
  FPolynomial f = f_polynomial(dl);
  HVector h = h_vector(f);
  doc["n"] = prof.n;
  doc["d"] = prof.d;
  doc["c"] = prof.c;
  doc["f"] = f.coeffs;
  doc["h"] = h.entries;
  if (prof.type_ncs) {
    auto [tn, tc, ts] = *prof.type_ncs;
    doc["type"] = {tn, tc, ts};
  } else {
    doc["type"] = nullptr;
  }
  doc["cone_apexes"] = cone_apexes(dl).members();
  doc["facet_count"] = dl.facets().size();
  doc["cone_bound"] = cone_bound(f, prof.n, prof.c);

  json per_char = json::object();
  bool full = dl.is_full_simplex();
  for (int ch : characteristics) {
    FieldSpec field = ch == 0 ? FieldSpec::rationals() : FieldSpec::prime(ch);
    json entry;
    entry["cm"] = is_CM(dl, field).verdict;
    if (!full) {
      bool dual_cm = is_CM(alexander_dual(dl), field).verdict;
      entry["dual_cm"] = dual_cm;
      entry["bicm"] = entry["cm"].get<bool>() && dual_cm;
    } else {
      entry["dual_cm"] = nullptr;
      entry["bicm"] = nullptr;
    }
    per_char[std::to_string(ch)] = entry;
  }
  doc["characteristics"] = per_char;

  if (!full) {
    SimplicialComplex dual = alexander_dual(dl);
    doc["dual_facet_count"] = dual.facets().size();
    doc["hilbert_prefix"] =
        hilbert_series_S(f, prof.n, prof.c, k_max).coeffs;
    json gc = json::array();
    for (auto [coeff, dim] : grothendieck_class(dl))
      gc.push_back({{"h_star", coeff}, {"ambient_dim", dim}});
    doc["grothendieck"] = gc;
  } else {
    doc["dual_facet_count"] = nullptr;
    doc["hilbert_prefix"] = nullptr;
    doc["grothendieck"] = nullptr;
  }
  return doc;
}

}  // namespace

std::string analyze_json(const SimplicialComplex& dl,
                         const std::vector<int>& characteristics, int k_max) {
  return analysis_document(dl, characteristics, k_max).dump(2) + "\n";
}

namespace {

json betti_document(const BettiTable& table) {
  json doc;
  doc["schema"] = "bicm-report/1";
  doc["characteristic"] = table.field.characteristic;
  json entries = json::array();
  for (auto& [ij, v] : table.entries)
    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
  doc["entries"] = entries;
  return doc;
}

}  // namespace

std::string betti_json(const BettiTable& table) {
  return betti_document(table).dump(2) + "\n";
}

std::string hilbert_json(const SimplicialComplex& dl, int k_max) {
  json doc;
  doc["schema"] = "bicm-report/1";
  ComplexProfile prof = profile(dl);
  doc["n"] = prof.n;
  doc["c"] = prof.c;
  doc["coefficients"] =
      hilbert_series_S(f_polynomial(dl), prof.n, prof.c, k_max).coeffs;
  return doc.dump(2) + "\n";
}

std::string search_report_json(const SearchReport& report) {
  json doc;
  doc["schema"] = "bicm-report/1";
  doc["n"] = report.n;
  doc["c"] = report.c;
  doc["s"] = report.s;
  doc["examined"] = report.examined;
  doc["bicm_found"] = report.bicm_found;
  doc["cones"] = report.cones;
  doc["noncones"] = report.noncones;
  doc["exhaustive"] = report.exhaustive;
  doc["seed"] = report.seed;
  json ex = json::array();
  for (const SimplicialComplex& dl : report.exemplars)
    ex.push_back(serialize_complex_file(dl));
  doc["exemplars"] = ex;
  return doc.dump(2) + "\n";
}

}  // namespace bicm
