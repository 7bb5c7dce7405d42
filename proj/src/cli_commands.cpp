#include "primex/cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "primex/affine.hpp"
#include "primex/blocks.hpp"
#include "primex/cohomology.hpp"
#include "primex/dyadic.hpp"
#include "primex/enumerate.hpp"
#include "primex/error.hpp"
#include "primex/extensions.hpp"
#include "primex/group_io.hpp"
#include "primex/modrep.hpp"

namespace primex {

namespace {

using nlohmann::json;

json json_order(Order o) {
  if (o <= Order(INT64_MAX))
    return static_cast<std::int64_t>(o);
  return order_to_string(o);
}

json json_int128(Int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX)
    return static_cast<std::int64_t>(v);
  return int128_to_string(v);
}

json json_perm(Permutation const &p) {
  json a = json::array();
  for (int i = 0; i < p.degree(); ++i)
    a.push_back(p[i]);
  return a;
}

json json_matrix(FlMatrix const &m) {
  json rows = json::array();
  for (int r = 0; r < m.n(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.n(); ++c)
      row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> parse_int_list(std::string const &text, char sep) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size())
        fail(ErrorCode::Parse, "bad integer '" + token + "'");
      out.push_back(v);
    } catch (Error const &) {
      throw;
    } catch (...) {
      fail(ErrorCode::Parse, "bad integer '" + token + "'");
    }
  }
  if (out.empty())
    fail(ErrorCode::Parse, "empty integer list");
  return out;
}

// "imgs;imgs;..." with each imgs a comma-separated image table.
std::vector<Permutation> parse_perm_list(std::string const &text, int degree) {
  std::vector<Permutation> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ';')) {
    std::vector<int> images = parse_int_list(part, ',');
    if (static_cast<int>(images.size()) != degree)
      fail(ErrorCode::Parse, "generator has " + std::to_string(images.size()) +
                                 " images, expected " + std::to_string(degree));
    out.emplace_back(images);
  }
  if (out.empty())
    fail(ErrorCode::Parse, "no generators given");
  return out;
}

// "n,l;entries;entries;..." with each entries an n*n row-major matrix.
LinearRepresentation parse_gl_spec(std::string const &spec) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(spec);
  while (std::getline(in, part, ';'))
    parts.push_back(part);
  if (parts.size() < 2)
    fail(ErrorCode::Parse, "subgroup spec needs 'n,l' plus matrices");
  std::vector<int> header = parse_int_list(parts[0], ',');
  if (header.size() != 2)
    fail(ErrorCode::Parse, "subgroup spec header must be 'n,l'");
  int n = header[0], l = header[1];
  if (n < 1 || !is_prime(l))
    fail(ErrorCode::Domain, "need n >= 1 and l prime");

  std::vector<FlMatrix> mats;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::vector<int> entries = parse_int_list(parts[i], ',');
    if (static_cast<int>(entries.size()) != n * n)
      fail(ErrorCode::Parse, "matrix needs " + std::to_string(n * n) +
                                 " entries");
    mats.emplace_back(l, n, entries);
  }

  std::vector<Permutation> perms;
  for (auto const &m : mats)
    perms.push_back(matrix_to_perm(m));
  PermutationGroup g(perms);
  // The permutation action on nonzero vectors is faithful, so the matrices
  // of the generators give a well-defined representation of g.
  return LinearRepresentation(g, mats);
}

json cohom_json(CohomologyReport const &c) {
  return json{{"l", c.l},           {"n", c.n},   {"group_order", c.group_order},
              {"h0", c.h0},         {"z1", c.z1}, {"b1", c.b1},
              {"h1", c.h1},         {"z2", c.z2}, {"b2", c.b2},
              {"h2", c.h2}};
}

json quartic_json(QuarticReport const &r) {
  json out{{"a", json_int128(r.poly.a)},
           {"b", json_int128(r.poly.b)},
           {"c", json_int128(r.poly.c)},
           {"d", json_int128(r.poly.d)},
           {"eisenstein", r.eisenstein},
           {"verdict", quartic_class_name(r.verdict)}};
  if (r.eisenstein) {
    out["disc"] = json_int128(r.disc);
    out["disc_valuation"] = r.disc_valuation;
    out["disc_square"] = r.disc_square;
    out["resolvent"] = json{{"c2", json_int128(r.resolvent.c2)},
                            {"c1", json_int128(r.resolvent.c1)},
                            {"c0", json_int128(r.resolvent.c0)}};
    out["resolvent_has_root"] = r.resolvent_has_root;
    if (r.resolvent_has_root)
      out["resolvent_root"] = json{{"valuation", r.resolvent_root.valuation},
                                   {"unit", r.resolvent_root.unit},
                                   {"unit_bits", r.resolvent_root.unit_bits}};
  }
  return out;
}

std::string safe_filename(std::string const &label) {
  std::string out;
  for (char ch : label)
    out.push_back(std::isalnum(static_cast<unsigned char>(ch)) ? ch : '-');
  while (!out.empty() && out.back() == '-')
    out.pop_back();
  return out.empty() ? "entry" : out;
}

json manifest_json(std::vector<ClassificationEntry> const &entries, int l,
                   int n) {
  json list = json::array();
  for (auto const &e : entries) {
    json gens = json::array();
    for (auto const &g : e.group.generators())
      gens.push_back(json_perm(g));
    json reps = json::array();
    for (auto const &mats : e.reps) {
      json one = json::array();
      for (auto const &m : mats)
        one.push_back(json_matrix(m));
      reps.push_back(one);
    }
    list.push_back(json{{"l", e.l},
                        {"n", e.n},
                        {"order", json_order(e.order)},
                        {"label", e.label},
                        {"degree", e.group.degree()},
                        {"generators", gens},
                        {"rep_matrices", reps}});
  }
  return json{{"l", l}, {"n", n},
              {"count", entries.size()}, {"entries", list}};
}

template <typename Fn>
CommandResult run_command(std::string command, Fn &&body) {
  CommandResult result;
  result.command = std::move(command);
  try {
    result.payload = body();
  } catch (Error const &e) {
    result.ok = false;
    result.error_code = error_code_name(e.code());
    result.error_message = e.what();
  } catch (std::exception const &e) {
    result.ok = false;
    result.error_code = error_code_name(ErrorCode::Defect);
    result.error_message = e.what();
  }
  return result;
}

} // namespace

json result_envelope(CommandResult const &r, std::int64_t elapsed_ms) {
  json out{{"command", r.command},
           {"status", r.ok ? "ok" : "error"},
           {"elapsed_ms", elapsed_ms}};
  if (r.ok)
    out["payload"] = r.payload;
  else
    out["error"] = json{{"code", r.error_code}, {"message", r.error_message}};
  return out;
}

CommandResult cmd_group_info(std::string const &file) {
  return run_command("group info", [&]() {
    PermutationGroup g = read_group_file(file);
    json out{{"degree", g.degree()},
             {"order", json_order(g.order())},
             {"transitive", is_transitive(g)},
             {"solvable", is_solvable(g)},
             {"derived_length", derived_length(g)}};
    if (g.degree() < 2)
      out["primitive"] = nullptr;
    else
      out["primitive"] = is_primitive(g);
    if (g.order() <= Order(200)) {
      PermutationGroup stab = point_stabilizer(g, 0);
      out["stabilizer_maximal"] = is_maximal(g, stab);
    } else {
      out["stabilizer_maximal"] = nullptr;
    }
    return out;
  });
}

CommandResult cmd_affine(std::string const &file) {
  return run_command("group affine", [&]() {
    PermutationGroup g = read_group_file(file);
    AffineRecovery rec = recover_affine(g);
    json labels = json::array();
    for (auto const &coords : rec.structure.labels)
      labels.push_back(coords);
    json gens = json::array();
    for (auto const &map : rec.generator_maps)
      gens.push_back(json{{"matrix", json_matrix(map.matrix)},
                          {"offset", map.offset}});
    return json{{"l", rec.structure.l},
                {"n", rec.structure.n},
                {"origin", rec.structure.origin},
                {"labels", labels},
                {"generators", gens}};
  });
}

CommandResult cmd_cohom_file(std::string const &file,
                             std::string const &normal_gens) {
  return run_command("cohom", [&]() {
    PermutationGroup g = read_group_file(file);
    PermutationGroup n(parse_perm_list(normal_gens, g.degree()));
    ConjugationModule module = module_from_conjugation(g, n);
    return cohom_json(cohomology(module.rep));
  });
}

CommandResult cmd_cohom_gl(std::string const &spec) {
  return run_command("cohom", [&]() {
    LinearRepresentation rep = parse_gl_spec(spec);
    return cohom_json(cohomology(rep));
  });
}

CommandResult cmd_complements(std::string const &file,
                              std::string const &normal_gens) {
  return run_command("ext complements", [&]() {
    PermutationGroup g = read_group_file(file);
    PermutationGroup n(parse_perm_list(normal_gens, g.degree()));
    ComplementReport rep = complements(g, n);
    json orders = json::array();
    for (auto const &h : rep.complements)
      orders.push_back(json_order(h.order()));
    return json{{"count", rep.complement_count},
                {"classes", rep.class_count},
                {"split", rep.split},
                {"complement_orders", orders}};
  });
}

CommandResult cmd_enumerate(int l, int n, std::string const &out_dir) {
  return run_command("enumerate", [&]() {
    auto entries = solvable_primitive_groups(l, n);
    json manifest = manifest_json(entries, l, n);
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      for (auto const &e : entries) {
        std::filesystem::path p =
            std::filesystem::path(out_dir) / (safe_filename(e.label) + ".group");
        write_group_file(p.string(), e.group);
      }
      std::ofstream mout(std::filesystem::path(out_dir) / "manifest.json");
      if (!mout)
        fail(ErrorCode::Parse, "cannot write manifest under " + out_dir);
      mout << manifest.dump(2) << "\n";
    }
    return manifest;
  });
}

CommandResult cmd_quartic_classify(std::string const &coeffs, int precision) {
  return run_command("quartic classify", [&]() {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(coeffs);
    while (std::getline(in, part, ','))
      parts.push_back(part);
    if (parts.size() != 4)
      fail(ErrorCode::Parse, "--coeffs needs exactly a,b,c,d");
    Quartic f;
    Int128 *slot[4] = {&f.a, &f.b, &f.c, &f.d};
    for (int i = 0; i < 4; ++i) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(parts[i], &used);
        if (used != parts[i].size())
          fail(ErrorCode::Parse, "bad coefficient '" + parts[i] + "'");
        *slot[i] = v;
      } catch (Error const &) {
        throw;
      } catch (...) {
        fail(ErrorCode::Parse, "bad coefficient '" + parts[i] + "'");
      }
    }
    return quartic_json(classify_quartic(f, precision));
  });
}

CommandResult cmd_quartic_scan(int mod_bits) {
  return run_command("quartic scan", [&]() {
    ScanReport r = eisenstein_scan(mod_bits);
    json samples = json::array();
    for (auto const &s : r.samples)
      samples.push_back(json{{"a", json_int128(s.poly.a)},
                             {"b", json_int128(s.poly.b)},
                             {"c", json_int128(s.poly.c)},
                             {"d", json_int128(s.poly.d)},
                             {"verdict", quartic_class_name(s.verdict)}});
    return json{{"mod_bits", r.mod_bits},
                {"total", r.total},
                {"counts", json{{"IMPRIMITIVE", r.imprimitive},
                                {"A4", r.a4},
                                {"S4", r.s4}}},
                {"samples", samples}};
  });
}

} // namespace primex
