#pragma once

#include "checks.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace permorb::cli {

// Runs a named command and writes its reports. Returns the process exit status:
// 0 iff every check passed.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out);

std::vector<Report> collect_reports(const std::string& name, const RunConfig& cfg, std::ostream* table);

// `id=... anchor=... status=... witness=...`, values quoted when needed.
std::string machine_line(const Report& r);
std::string text_line(const Report& r);

bool command_needs_lattice(const std::string& name);
const std::vector<std::string>& command_names();

}  // namespace permorb::cli
