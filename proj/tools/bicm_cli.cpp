// bicm command line front end. Talks to the library exclusively through the
// C interface in bicm/bicm_c.h; human-readable output is rendered from the
// same JSON documents the --json mode prints, so both carry identical
// numbers.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "bicm/bicm_c.h"

using nlohmann::json;

namespace {

struct ComplexHandle {
  bicm_complex* ptr = nullptr;
  ~ComplexHandle() { bicm_complex_free(ptr); }
};

struct StringHandle {
  char* ptr = nullptr;
  ~StringHandle() { bicm_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void fail(int code) {
  std::cerr << "error: " << bicm_last_error() << "\n";
  std::exit(code);
}

void check(int code) {
  if (code != BICM_OK) fail(code);
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(1);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ComplexHandle load_complex(const std::string& path) {
  ComplexHandle h;
  check(bicm_complex_parse(read_file(path).c_str(), &h.ptr));
  return h;
}

void apply_env_guards() {
  auto geti = [](const char* name) {
    const char* v = std::getenv(name);
    return v ? std::atoi(v) : 0;
  };
  auto getl = [](const char* name) {
    const char* v = std::getenv(name);
    return v ? std::atol(v) : 0L;
  };
  bicm_set_guards(geti("BICM_ISO_GUARD"), getl("BICM_FACE_GUARD"),
                  geti("BICM_SHELLING_GUARD"), geti("BICM_ENUM_GUARD"));
}

void print_analysis_text(const json& doc) {
  std::cout << "n = " << doc["n"] << "   d = " << doc["d"]
            << "   c = " << doc["c"] << "\n";
  std::cout << "f = " << doc["f"].dump() << "\n";
  std::cout << "h = " << doc["h"].dump() << "\n";
  std::cout << "type (n,c,s) = "
            << (doc["type"].is_null() ? std::string("none") : doc["type"].dump())
            << "\n";
  std::cout << "cone apexes = " << doc["cone_apexes"].dump() << "\n";
  std::cout << "facets = " << doc["facet_count"] << ", dual facets = "
            << (doc["dual_facet_count"].is_null()
                    ? std::string("n/a")
                    : doc["dual_facet_count"].dump())
            << "\n";
  std::cout << "cone bound a*b = " << doc["cone_bound"] << "\n";
  for (auto& [ch, entry] : doc["characteristics"].items())
    std::cout << "char " << ch << ": CM = " << entry["cm"].dump()
              << ", dual CM = " << entry["dual_cm"].dump()
              << ", bi-CM = " << entry["bicm"].dump() << "\n";
  if (!doc["hilbert_prefix"].is_null())
    std::cout << "hilbert series prefix = " << doc["hilbert_prefix"].dump()
              << "\n";
  if (!doc["grothendieck"].is_null()) {
    std::cout << "grothendieck class =";
    for (auto& term : doc["grothendieck"])
      std::cout << " (" << term["h_star"] << ", P^" << term["ambient_dim"]
                << ")";
    std::cout << "\n";
  }
}

void print_betti_text(const json& doc) {
  int mi = 0, mj = 0;
  for (auto& e : doc["entries"]) {
    mi = std::max(mi, e["i"].get<int>());
    mj = std::max(mj, e["j"].get<int>());
  }
  auto at = [&](int i, int j) -> long long {
    for (auto& e : doc["entries"])
      if (e["i"] == i && e["j"] == j) return e["beta"].get<long long>();
    return 0;
  };
  std::cout << "betti (char " << doc["characteristic"] << ")\n     ";
  for (int i = 0; i <= mi; ++i) std::cout << "\t" << i;
  std::cout << "\n";
  for (int row = 0; row <= std::max(0, mj - mi); ++row) {
    std::cout << row << ":";
    for (int i = 0; i <= mi; ++i) {
      long long v = at(i, i + row);
      if (v)
        std::cout << "\t" << v;
      else
        std::cout << "\t.";
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_env_guards();
  CLI::App app{"bi-Cohen-Macaulay simplicial complex toolkit"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker count (never changes output)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full invariant report");
  std::string file;
  std::string chars = "0,2,3,5";
  int kmax = 8;
  bool as_json = false;
  analyze->add_option("file", file, "complex file ('-' for stdin)")->required();
  analyze->add_option("--chars", chars, "characteristics, e.g. 0,2,3");
  analyze->add_option("--kmax", kmax, "Hilbert series truncation");
  analyze->add_flag("--json", as_json, "print the JSON document");

  // dual
  auto* dual = app.add_subcommand("dual", "write the Alexander dual");
  std::string dual_file, dual_out;
  dual->add_option("file", dual_file)->required();
  dual->add_option("-o,--output", dual_out, "output path (default stdout)");

  // generate
  auto* generate = app.add_subcommand("generate", "construct a complex");
  generate->require_subcommand(1);
  int g_s = 0, g_c = 0, g_d = 0, g_n = 0, g_p = 0, g_q = 0;
  std::uint64_t g_seed = 0;
  std::string g_identify;
  bool g_y = false;
  auto* gsk = generate->add_subcommand("skeleton", "(c-1)-skeleton of a simplex");
  gsk->add_option("--s", g_s)->required();
  gsk->add_option("--c", g_c)->required();
  auto* gtr = generate->add_subcommand("tree", "random (d-1)-tree");
  gtr->add_option("--d", g_d)->required();
  gtr->add_option("--n", g_n)->required();
  gtr->add_option("--seed", g_seed);
  auto* gpm = generate->add_subcommand("pathmatrix", "path-matrix complex");
  gpm->add_option("--p", g_p)->required();
  gpm->add_option("--q", g_q)->required();
  gpm->add_option("--identify", g_identify,
                  "merge groups 'r,c+r,c;r,c+r,c' on normal diagonals");
  gpm->add_flag("--y", g_y, "emit Y (vertical-path complex) instead of X");
  auto* grp = generate->add_subcommand("rp2", "6-vertex projective plane");
  (void)grp;
  auto* gnc = generate->add_subcommand("noncone", "bi-CM non-cone of type (n,c,s)");
  gnc->add_option("--n", g_n)->required();
  gnc->add_option("--c", g_c)->required();
  gnc->add_option("--s", g_s)->required();

  // betti
  auto* betti = app.add_subcommand("betti", "graded Betti table (Hochster)");
  std::string betti_file;
  int betti_char = 0;
  bool betti_json_flag = false;
  betti->add_option("file", betti_file)->required();
  betti->add_option("--char", betti_char, "field characteristic");
  betti->add_flag("--json", betti_json_flag);

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of S(complex)");
  std::string hil_file;
  int hil_kmax = 8;
  bool hil_json = false;
  hilbert->add_option("file", hil_file)->required();
  hilbert->add_option("--kmax", hil_kmax);
  hilbert->add_flag("--json", hil_json);

  // shelling
  auto* shelling = app.add_subcommand("shelling", "check or search shellings");
  std::string sh_file, sh_order;
  bool sh_search = false;
  shelling->add_option("file", sh_file)->required();
  shelling->add_option("--order", sh_order, "comma-separated 1-based facet order");
  shelling->add_flag("--search", sh_search, "exhaustive shelling search");

  // dichotomy
  auto* dicho = app.add_subcommand("dichotomy", "path dichotomy witness");
  int di_p = 0, di_q = 0;
  std::string di_cells;
  dicho->add_option("--p", di_p)->required();
  dicho->add_option("--q", di_q)->required();
  dicho->add_option("--cells", di_cells, "cells 'r,c r,c ...' of F");

  // search
  auto* search = app.add_subcommand("search", "enumerate complexes of a type");
  int se_n = 0, se_c = 0, se_s = 0;
  long long se_samples = 0;
  std::uint64_t se_seed = 0;
  bool se_exhaustive = false, se_json = false;
  search->add_option("--n", se_n)->required();
  search->add_option("--c", se_c)->required();
  search->add_option("--s", se_s)->required();
  search->add_flag("--exhaustive", se_exhaustive);
  search->add_option("--samples", se_samples);
  search->add_option("--seed", se_seed);
  search->add_flag("--json", se_json);

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    ComplexHandle h = load_complex(file);
    StringHandle out;
    check(bicm_analyze_json(h.ptr, chars.c_str(), kmax, &out.ptr));
    if (as_json)
      std::cout << out.str();
    else
      print_analysis_text(json::parse(out.str()));
  } else if (dual->parsed()) {
    ComplexHandle h = load_complex(dual_file);
    ComplexHandle d;
    check(bicm_complex_dual(h.ptr, &d.ptr));
    StringHandle out;
    check(bicm_complex_serialize(d.ptr, &out.ptr));
    if (dual_out.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream of(dual_out);
      of << out.str();
    }
  } else if (generate->parsed()) {
    ComplexHandle h;
    if (gsk->parsed())
      check(bicm_generate_skeleton(g_s, g_c, &h.ptr));
    else if (gtr->parsed())
      check(bicm_generate_tree(g_d, g_n, g_seed, &h.ptr));
    else if (gpm->parsed())
      check(bicm_generate_pathmatrix(g_p, g_q, g_identify.c_str(), g_y ? 1 : 0,
                                     &h.ptr));
    else if (gnc->parsed())
      check(bicm_generate_noncone(g_n, g_c, g_s, &h.ptr));
    else
      check(bicm_generate_rp2(&h.ptr));
    StringHandle out;
    check(bicm_complex_serialize(h.ptr, &out.ptr));
    std::cout << out.str();
  } else if (betti->parsed()) {
    ComplexHandle h = load_complex(betti_file);
    StringHandle out;
    check(bicm_betti_json(h.ptr, betti_char, &out.ptr));
    if (betti_json_flag)
      std::cout << out.str();
    else
      print_betti_text(json::parse(out.str()));
  } else if (hilbert->parsed()) {
    ComplexHandle h = load_complex(hil_file);
    StringHandle out;
    check(bicm_hilbert_json(h.ptr, hil_kmax, &out.ptr));
    if (hil_json) {
      std::cout << out.str();
    } else {
      json doc = json::parse(out.str());
      std::cout << "hilbert coefficients (k = 0.."
                << doc["coefficients"].size() - 1
                << "): " << doc["coefficients"].dump() << "\n";
    }
  } else if (shelling->parsed()) {
    ComplexHandle h = load_complex(sh_file);
    if (sh_search) {
      StringHandle out;
      check(bicm_shelling_search(h.ptr, &out.ptr));
      if (out.ptr)
        std::cout << "shelling order: " << out.str() << "\n";
      else
        std::cout << "not shellable\n";
    } else if (!sh_order.empty()) {
      int ok = 0;
      check(bicm_shelling_check(h.ptr, sh_order.c_str(), &ok));
      std::cout << (ok ? "shelling\n" : "not a shelling\n");
    } else {
      std::cerr << "error: pass --order or --search\n";
      return 1;
    }
  } else if (dicho->parsed()) {
    StringHandle out;
    check(bicm_dichotomy_json(di_p, di_q, di_cells.c_str(), &out.ptr));
    json doc = json::parse(out.str());
    std::cout << doc["alternative"].get<std::string>() << ": path "
              << doc["path_values"].dump() << "\n";
  } else if (search->parsed()) {
    if (se_exhaustive) se_samples = 0;
    StringHandle out;
    check(bicm_search_json(se_n, se_c, se_s, se_samples, se_seed, &out.ptr));
    if (se_json) {
      std::cout << out.str();
    } else {
      json doc = json::parse(out.str());
      std::cout << "search (n,c,s) = (" << doc["n"] << "," << doc["c"] << ","
                << doc["s"] << ") "
                << (doc["exhaustive"].get<bool>() ? "[exhaustive]"
                                                  : "[sampling]")
                << "\n";
      std::cout << "examined " << doc["examined"] << ", bi-CM "
                << doc["bicm_found"] << " (cones " << doc["cones"]
                << ", non-cones " << doc["noncones"] << ")\n";
      for (auto& ex : doc["exemplars"])
        std::cout << "non-cone exemplar:\n" << ex.get<std::string>();
    }
  }
  return 0;
}
