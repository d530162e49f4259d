#pragma once

#include <permorb/characters.hpp>
#include <permorb/isomap.hpp>
#include <permorb/report.hpp>

#include <string>
#include <vector>

namespace permorb::cli {

struct RunConfig {
  std::string lattice_path;
  int k = 2;
  Rat q_order = 10;
  Rat weight_cutoff = 2;
  Rat mode_bound = 2;
  int series_order = 8;
  bool machine = false;
};

// Each suite returns its reports in a fixed order and may print tables to `table`
// (text mode only; pass nullptr to suppress).
std::vector<Report> lemma_suite(int max_m, std::ostream* table);
std::vector<Report> coeff_suite(int k, int series_order, std::ostream* table);
std::vector<Report> operator_suite(const Lattice& K, int k, std::ostream* table);
std::vector<Report> cocycle_suite(const Lattice& K, int k);
std::vector<Report> virasoro_suite(const Lattice& K, const Rat& weight_cutoff);
std::vector<Report> character_suite(const Lattice& K, int k, const Rat& q_order, const Rat& weight_cutoff,
                                    std::ostream* table);
std::vector<Report> identity_suite(const Lattice& K, int k, const Rat& q_order, std::ostream* table);
std::vector<Report> l0_suite(const Lattice& K, int k, const Rat& weight_cutoff);
std::vector<Report> iso_suite(const Lattice& K, int k, const Rat& weight_cutoff, const Rat& mode_bound);

}  // namespace permorb::cli
