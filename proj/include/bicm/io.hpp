#ifndef BICM_IO_HPP
#define BICM_IO_HPP

#include <string>
#include <vector>

#include "bicm/betti.hpp"
#include "bicm/complex.hpp"
#include "bicm/explorer.hpp"

namespace bicm {

// Text format: optional '#' comment lines, one "n <integer>" header line,
// then one facet per line as 1-based vertex labels ("empty" for the empty
// facet). Serialization emits the canonical facet order.
SimplicialComplex parse_complex_file(const std::string& text);
std::string serialize_complex_file(const SimplicialComplex& dl);

// Structured reports; every document carries schema = "bicm-report/1".
std::string analyze_json(const SimplicialComplex& dl,
                         const std::vector<int>& characteristics, int k_max);

std::string betti_json(const BettiTable& table);

std::string hilbert_json(const SimplicialComplex& dl, int k_max);

std::string search_report_json(const SearchReport& report);

}  // namespace bicm

#endif  // BICM_IO_HPP
