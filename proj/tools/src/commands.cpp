#include "commands.hpp"

#include "lattice_file.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permorb::cli {

namespace {

std::string quote(const std::string& v) {
  const bool plain = !v.empty() && v.find_first_of(" \t\"\\=") == std::string::npos;
  if (plain) return v;
  std::string q = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') q += '\\';
    if (c == '\n')
      q += "\\n";
    else
      q += c;
  }
  return q + "\"";
}

void append(std::vector<Report>& all, std::vector<Report> more) {
  for (auto& r : more) all.push_back(std::move(r));
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"lemma", "coeffs", "chars", "thm41", "iso", "verify-all"};
  return names;
}

bool command_needs_lattice(const std::string& name) { return name != "lemma" && name != "coeffs"; }

std::string machine_line(const Report& r) {
  return "id=" + quote(r.id) + " anchor=" + quote(r.anchor) + " status=" + r.status() + " witness=" + quote(r.witness);
}

std::string text_line(const Report& r) {
  std::string s = "[" + r.status() + "] " + r.id + "  (" + r.anchor + ")";
  if (!r.pass && !r.witness.empty()) s += "\n       witness: " + r.witness;
  return s;
}

std::vector<Report> collect_reports(const std::string& name, const RunConfig& cfg, std::ostream* table) {
  if (cfg.k < 1) throw std::invalid_argument("--k must be at least 1");
  if (cfg.q_order <= 0 || cfg.weight_cutoff <= 0 || cfg.mode_bound <= 0 || cfg.series_order < 1)
    throw std::invalid_argument("orders and cutoffs must be positive");
  if (std::find(command_names().begin(), command_names().end(), name) == command_names().end())
    throw std::invalid_argument("unknown command '" + name + "'");

  if (name == "lemma") return lemma_suite(24, table);
  if (name == "coeffs") return coeff_suite(cfg.k, cfg.series_order, table);

  if (cfg.lattice_path.empty()) throw std::invalid_argument("command '" + name + "' needs --lattice");
  const Lattice K = parse_lattice_file(cfg.lattice_path);
  if (name == "chars") return character_suite(K, cfg.k, cfg.q_order, cfg.weight_cutoff, table);
  if (name == "thm41") return identity_suite(K, cfg.k, cfg.q_order, table);
  if (name == "iso") return iso_suite(K, cfg.k, cfg.weight_cutoff, cfg.mode_bound);

  std::vector<Report> all;
  append(all, lemma_suite(24, nullptr));
  append(all, coeff_suite(cfg.k, cfg.series_order, nullptr));
  append(all, cocycle_suite(K, cfg.k));
  append(all, operator_suite(K, cfg.k, nullptr));
  append(all, virasoro_suite(K, cfg.weight_cutoff + 1));
  append(all, l0_suite(K, cfg.k, cfg.weight_cutoff));
  append(all, character_suite(K, cfg.k, cfg.q_order, cfg.weight_cutoff + 1, nullptr));
  append(all, identity_suite(K, cfg.k, cfg.q_order, nullptr));
  append(all, iso_suite(K, cfg.k, cfg.weight_cutoff, cfg.mode_bound));
  return all;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out) {
  std::ostringstream table;
  const auto reports = collect_reports(name, cfg, cfg.machine ? nullptr : &table);
  if (!cfg.machine && !table.str().empty()) out << table.str() << "\n";
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << (cfg.machine ? machine_line(r) : text_line(r)) << "\n";
    if (!r.pass) ++failed;
  }
  if (!cfg.machine)
    out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace permorb::cli
