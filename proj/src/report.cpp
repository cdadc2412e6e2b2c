#include "fplevel/report.hpp"

#include <algorithm>
#include <sstream>

#include "fplevel/errors.hpp"
#include "fplevel/parse.hpp"

namespace fplevel {

using nlohmann::json;

namespace {

json base(const Polynomial& f) {
  json j;
  j["p"] = f.field().p();
  j["f"] = to_string(f);
  return j;
}

bool cy_shape(const Polynomial& f) {
  auto d = f.degree();
  return d && *d == f.nvars();
}

void attach_level(json& j, const LevelResult& r) {
  j["determined"] = r.determined;
  j["stabilization_index"] = r.stabilization_index;
  j["level"] = r.level;
}

}  // namespace

json level_report(const Polynomial& f, std::uint32_t cutoff) {
  json j = base(f);
  j["command"] = "level";
  LevelResult r = level(f, cutoff);
  attach_level(j, r);
  j["hsl"] = nullptr;
  j["grid_jump"] = nullptr;
  if (r.determined) {
    j["hsl"] = std::max<std::uint32_t>(r.stabilization_index, 1);
    if (auto lam = largest_grid_jump(f, cutoff)) j["grid_jump"] = lam->str();
  }
  j["hasse_witt"] = nullptr;
  j["ordinary"] = nullptr;
  if (cy_shape(f)) {
    j["hasse_witt"] = hasse_witt_scalar(f);
    j["ordinary"] = is_ordinary_cy(f);
  }
  return j;
}

json hsl_report(const Polynomial& f, std::uint32_t cutoff) {
  json j = base(f);
  j["command"] = "hsl";
  LevelResult r = level(f, cutoff);
  if (!r.determined)
    fail(Errc::CutoffExceeded, "chain did not stabilize within cutoff " + std::to_string(cutoff));
  attach_level(j, r);
  j["hsl"] = std::max<std::uint32_t>(r.stabilization_index, 1);
  return j;
}

json fpt_report(const Polynomial& f, std::uint32_t e_max) {
  json j = base(f);
  j["command"] = "fpt";
  auto bounds = fpt_bounds(f, e_max);
  json nus = json::array();
  for (std::uint32_t e = 1; e <= e_max; ++e) nus.push_back(nu(f, e));
  j["nu"] = nus;
  j["fpt_lower"] = bounds.back().first.str();
  j["fpt_upper"] = bounds.back().second.str();
  return j;
}

json ordinary_report(const Polynomial& f) {
  json j = base(f);
  j["command"] = "ordinary";
  j["hasse_witt"] = hasse_witt_scalar(f);
  j["ordinary"] = is_ordinary_cy(f);
  return j;
}

json chain_report(const Polynomial& f, std::uint32_t cutoff) {
  json j = base(f);
  j["command"] = "chain";
  LevelResult r = level(f, cutoff);
  attach_level(j, r);
  json chain = json::array();
  for (const HomIdeal& ideal : r.chain) {
    json gens = json::array();
    for (const Polynomial& g : ideal.gens()) gens.push_back(to_string(g));
    chain.push_back(gens);
  }
  j["chain"] = chain;
  return j;
}

json jump_report(const Polynomial& f, std::uint32_t cutoff) {
  json j = base(f);
  j["command"] = "jump";
  LevelResult r = level(f, cutoff);
  if (!r.determined)
    fail(Errc::CutoffExceeded, "chain did not stabilize within cutoff " + std::to_string(cutoff));
  attach_level(j, r);
  auto lam = largest_grid_jump(f, cutoff);
  j["grid_jump"] = lam ? json(lam->str()) : json(nullptr);
  return j;
}

json operator_synth_report(const Polynomial& f, std::uint32_t e) {
  json j = base(f);
  j["command"] = "operator";
  j["mode"] = "synth";
  j["e"] = e;
  auto cert = synthesize(f, e);
  if (!cert) {
    j["operator"] = nullptr;
    j["valid"] = false;
    return j;
  }
  j["operator"] = to_text(cert->op);
  j["valid"] = cert->valid;
  return j;
}

json operator_fermat_report(std::uint32_t n, PrimeField field) {
  OperatorCertificate cert = fermat_level2(n, field);
  json j = base(fermat_poly(n, field));
  j["command"] = "operator";
  j["mode"] = "fermat";
  j["n"] = n;
  j["e"] = cert.e;
  j["operator"] = to_text(cert.op);
  j["valid"] = cert.valid;
  return j;
}

json operator_verify_report(const DiffOp& op, const Polynomial& f, std::uint32_t e) {
  json j = base(f);
  j["command"] = "operator";
  j["mode"] = "verify";
  j["e"] = e;
  VerifyResult vr = verify_level_operator(op, f, e);
  j["operator"] = to_text(op);
  j["valid"] = vr.cert.valid;
  j["proportional_unit"] =
      vr.proportional_unit ? json(*vr.proportional_unit) : json(nullptr);
  return j;
}

std::string render_text(const json& j) {
  std::ostringstream out;
  const std::string cmd = j.value("command", "");
  out << "p = " << j["p"].get<std::uint64_t>() << "\n";
  out << "f = " << j["f"].get<std::string>() << "\n";
  if (j.contains("determined")) {
    if (j["determined"].get<bool>()) {
      out << "level = " << j["level"].get<std::uint64_t>()
          << "  (chain stabilizes at e = " << j["stabilization_index"].get<std::uint64_t>()
          << ")\n";
    } else {
      out << "level >= " << j["level"].get<std::uint64_t>()
          << "  (chain still strictly descending at cutoff)\n";
    }
  }
  if (j.contains("hsl") && !j["hsl"].is_null())
    out << "hsl = " << j["hsl"].get<std::uint64_t>() << "\n";
  if (j.contains("hasse_witt") && !j["hasse_witt"].is_null()) {
    out << "hasse_witt = " << j["hasse_witt"].get<std::uint64_t>() << "\n";
    out << "ordinary = " << (j["ordinary"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (j.contains("grid_jump"))
    out << "largest grid jump = "
        << (j["grid_jump"].is_null() ? std::string("none below 1")
                                     : j["grid_jump"].get<std::string>())
        << "\n";
  if (cmd == "fpt") {
    out << "nu =";
    for (const auto& v : j["nu"]) out << " " << v.get<std::uint64_t>();
    out << "\n";
    out << "fpt in (" << j["fpt_lower"].get<std::string>() << ", "
        << j["fpt_upper"].get<std::string>() << "]\n";
  }
  if (j.contains("chain")) {
    std::size_t e = 0;
    for (const auto& gens : j["chain"]) {
      out << "J_" << e++ << " = (";
      bool first = true;
      for (const auto& g : gens) {
        if (!first) out << ", ";
        first = false;
        out << g.get<std::string>();
      }
      out << ")\n";
    }
  }
  if (cmd == "operator") {
    out << "e = " << j["e"].get<std::uint64_t>() << "\n";
    if (j["operator"].is_null()) {
      out << "operator: none (chain not stable at e)\n";
    } else {
      out << j["operator"].get<std::string>();
      if (!j["operator"].get<std::string>().empty() &&
          j["operator"].get<std::string>().back() != '\n')
        out << "\n";
      out << "valid = " << (j["valid"].get<bool>() ? "yes" : "no") << "\n";
      if (j.contains("proportional_unit") && !j["proportional_unit"].is_null())
        out << "proportional unit = " << j["proportional_unit"].get<std::uint64_t>() << "\n";
    }
  }
  return out.str();
}

}  // namespace fplevel
