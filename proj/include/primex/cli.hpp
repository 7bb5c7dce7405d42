#pragma once

#include <string>

#include "json.hpp"

namespace primex {

// Outcome of one CLI command. The payload is command-specific JSON and is
// fully determined by the inputs; timing lives only in the envelope.
struct CommandResult {
  std::string command;
  bool ok = true;
  std::string error_code;
  std::string error_message;
  nlohmann::json payload;
};

// {"command": ..., "status": "ok"|"error", "payload"|"error": ...,
//  "elapsed_ms": ...}
nlohmann::json result_envelope(CommandResult const &r, std::int64_t elapsed_ms);

// group info FILE
CommandResult cmd_group_info(std::string const &file);

// group affine FILE
CommandResult cmd_affine(std::string const &file);

// cohom FILE --normal "imgs;imgs;..." (cohomology of the conjugation module
// of the named normal subgroup), or cohom --gl-subgroup "n,l;m;m;..." with
// each m an n*n row-major matrix over F_l.
CommandResult cmd_cohom_file(std::string const &file,
                             std::string const &normal_gens);
CommandResult cmd_cohom_gl(std::string const &spec);

// ext complements FILE --normal "imgs;imgs;..."
CommandResult cmd_complements(std::string const &file,
                              std::string const &normal_gens);

// enumerate --l L --n N [--out DIR]
CommandResult cmd_enumerate(int l, int n, std::string const &out_dir);

// quartic classify --coeffs a,b,c,d [--precision K]
CommandResult cmd_quartic_classify(std::string const &coeffs, int precision);

// quartic scan --mod-bits M
CommandResult cmd_quartic_scan(int mod_bits);

} // namespace primex
