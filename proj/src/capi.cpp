#include "bicm/bicm_c.h"

#include <json.hpp>

#include <cstring>
#include <sstream>
#include <string>

#include "bicm/complex.hpp"
#include "bicm/constructions.hpp"
#include "bicm/explorer.hpp"
#include "bicm/homology.hpp"
#include "bicm/io.hpp"

struct bicm_complex {
  bicm::SimplicialComplex value;
};

namespace {

thread_local std::string g_last_error;

char* alloc_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return BICM_OK;
  } catch (const bicm::guard_error& e) {
    g_last_error = e.what();
    return BICM_ERR_GUARD;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BICM_ERR_INVALID;
  }
}

std::vector<int> parse_int_list(const char* csv) {
  std::vector<int> out;
  if (!csv) return out;
  std::string s(csv);
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

std::vector<std::vector<bicm::Cell>> parse_merges(const char* identify) {
  std::vector<std::vector<bicm::Cell>> merges;
  if (!identify || !*identify) return merges;
  std::istringstream groups(identify);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.empty()) continue;
    std::vector<bicm::Cell> cells;
    std::istringstream parts(group);
    std::string cell;
    while (std::getline(parts, cell, '+')) {
      int row, col;
      char comma;
      std::istringstream cs(cell);
      if (!(cs >> row >> comma >> col) || comma != ',')
        throw std::invalid_argument("malformed cell '" + cell + "'");
      cells.push_back(bicm::Cell{row, col});
    }
    merges.push_back(cells);
  }
  return merges;
}

}  // namespace

extern "C" {

const char* bicm_last_error(void) { return g_last_error.c_str(); }

void bicm_set_guards(int iso_n, long face_count, int shelling_facets,
                     int enum_n) {
  if (iso_n > 0) bicm::guards::iso_n = iso_n;
  if (face_count > 0) bicm::guards::face_count = face_count;
  if (shelling_facets > 0) bicm::guards::shelling_facets = shelling_facets;
  if (enum_n > 0) bicm::guards::enum_n = enum_n;
}

void bicm_string_free(char* s) { delete[] s; }

void bicm_complex_free(bicm_complex* dl) { delete dl; }

int bicm_complex_parse(const char* text, bicm_complex** out) {
  return guarded([&] {
    if (!text || !out) throw std::invalid_argument("null argument");
    *out = new bicm_complex{bicm::parse_complex_file(text)};
  });
}

int bicm_complex_serialize(const bicm_complex* dl, char** out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    *out = alloc_string(bicm::serialize_complex_file(dl->value));
  });
}

int bicm_complex_dual(const bicm_complex* dl, bicm_complex** out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    *out = new bicm_complex{bicm::alexander_dual(dl->value)};
  });
}

int bicm_generate_skeleton(int s, int c, bicm_complex** out) {
  return guarded([&] { *out = new bicm_complex{bicm::skeleton_complex(s, c)}; });
}

int bicm_generate_tree(int d, int n, uint64_t seed, bicm_complex** out) {
  return guarded([&] {
    if (n < d) throw std::invalid_argument("tree needs n >= d");
    *out = new bicm_complex{bicm::d_tree_random(d, n - d, seed)};
  });
}

int bicm_generate_pathmatrix(int p, int q, const char* identify, int which_y,
                             bicm_complex** out) {
  return guarded([&] {
    if (identify && *identify) {
      if (which_y)
        throw std::invalid_argument("identification applies to X only");
      auto spec = bicm::PathMatrixSpec::from_merges(p, q, parse_merges(identify));
      *out = new bicm_complex{bicm::identify_diagonals(spec)};
      return;
    }
    auto [x, y] = bicm::path_complexes(p, q);
    *out = new bicm_complex{which_y ? y : x};
  });
}

int bicm_generate_rp2(bicm_complex** out) {
  return guarded([&] { *out = new bicm_complex{bicm::rp2_six()}; });
}

int bicm_generate_noncone(int n, int c, int s, bicm_complex** out) {
  return guarded([&] {
    *out = new bicm_complex{bicm::biCM_noncone(n, c, s).complex};
  });
}

int bicm_analyze_json(const bicm_complex* dl, const char* characteristics,
                      int k_max, char** out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    std::vector<int> chars = parse_int_list(characteristics);
    if (chars.empty()) chars = {0, 2, 3, 5};
    *out = alloc_string(bicm::analyze_json(dl->value, chars, k_max));
  });
}

int bicm_betti_json(const bicm_complex* dl, int characteristic, char** out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    bicm::FieldSpec field = characteristic == 0
                                ? bicm::FieldSpec::rationals()
                                : bicm::FieldSpec::prime(characteristic);
    *out = alloc_string(bicm::betti_json(bicm::hochster_betti(dl->value, field)));
  });
}

int bicm_hilbert_json(const bicm_complex* dl, int k_max, char** out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    *out = alloc_string(bicm::hilbert_json(dl->value, k_max));
  });
}

int bicm_shelling_check(const bicm_complex* dl, const char* order, int* out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    std::vector<int> ord = parse_int_list(order);
    for (int& i : ord) --i;  // 1-based in the interface
    *out = bicm::is_shelling(dl->value, ord) ? 1 : 0;
  });
}

int bicm_shelling_search(const bicm_complex* dl, char** out) {
  return guarded([&] {
    if (!dl || !out) throw std::invalid_argument("null argument");
    auto found = bicm::find_shelling(dl->value);
    if (!found) {
      *out = nullptr;
      return;
    }
    std::ostringstream os;
    for (size_t i = 0; i < found->size(); ++i) {
      if (i) os << ',';
      os << (*found)[i] + 1;
    }
    *out = alloc_string(os.str());
  });
}

int bicm_dichotomy_json(int p, int q, const char* cells, char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    std::vector<bicm::Cell> f;
    if (cells && *cells) {
      std::istringstream in(cells);
      std::string tok;
      while (in >> tok) {
        int row, col;
        char comma;
        std::istringstream cs(tok);
        if (!(cs >> row >> comma >> col) || comma != ',')
          throw std::invalid_argument("malformed cell '" + tok + "'");
        f.push_back(bicm::Cell{row, col});
      }
    }
    bicm::DichotomyResult r = bicm::path_dichotomy(f, p, q);
    nlohmann::json doc;
    doc["schema"] = "bicm-report/1";
    doc["p"] = p;
    doc["q"] = q;
    doc["alternative"] =
        r.horizontal_in_f ? "horizontal-in-f" : "vertical-in-complement";
    doc["path_values"] = r.path.values;
    *out = alloc_string(doc.dump(2) + "\n");
  });
}

int bicm_search_json(int n, int c, int s, long long samples, uint64_t seed,
                     char** out) {
  return guarded([&] {
    if (!out) throw std::invalid_argument("null argument");
    bicm::SearchLimits limits;
    limits.max_samples = samples;
    limits.seed = seed;
    *out = alloc_string(
        bicm::search_report_json(bicm::enumerate_type(n, c, s, limits)));
  });
}

}  // extern "C"
