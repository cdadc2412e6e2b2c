#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "fplevel/diffop.hpp"
#include "fplevel/invariants.hpp"
#include "fplevel/polynomial.hpp"

namespace fplevel {

/// Machine-readable reports with stable field names. Every report carries
/// p and the canonical form of f; fields that do not apply are null.
nlohmann::json level_report(const Polynomial& f, std::uint32_t cutoff);
nlohmann::json hsl_report(const Polynomial& f, std::uint32_t cutoff);
nlohmann::json fpt_report(const Polynomial& f, std::uint32_t e_max);
nlohmann::json ordinary_report(const Polynomial& f);
nlohmann::json chain_report(const Polynomial& f, std::uint32_t cutoff);
nlohmann::json jump_report(const Polynomial& f, std::uint32_t cutoff);
nlohmann::json operator_synth_report(const Polynomial& f, std::uint32_t e);
nlohmann::json operator_fermat_report(std::uint32_t n, PrimeField field);
nlohmann::json operator_verify_report(const DiffOp& op, const Polynomial& f, std::uint32_t e);

std::string render_text(const nlohmann::json& report);

}  // namespace fplevel
