#pragma once

#include "kpieri/chains.hpp"
#include "kpieri/grassmannian.hpp"
#include "kpieri/polynomial.hpp"
#include "kpieri/schubert_basis.hpp"

#include <json.hpp>

#include <string>

namespace kpieri {

/// Trimmed window; the identity is [].
nlohmann::json to_json(const Permutation& w);
/// {"terms":[{"perm":[...],"coeff":c}, ...]} in (length, window) order.
nlohmann::json to_json(const BasisExpansion& e);
/// {"terms":[{"partition":[...],"coeff":c}, ...]}
nlohmann::json to_json(const PartitionExpansion& e);
/// {"terms":[{"exponents":[...],"coeff":c}, ...]} in ascending term order.
nlohmann::json to_json(const Polynomial& f);
/// {"start":[...],"k":k,"steps":[{"a":a,"b":b,"marked":m}, ...],"end":[...],"sign":s}
nlohmann::json to_json(const SignedChain& c);
nlohmann::json to_json(const MarkedChain& c);

/// One "coeff  perm" line per term; "0" for the empty expansion.
std::string to_text(const BasisExpansion& e);
/// Labels in order, marked ones starred: "(3,6)* (1,5)* (2,5) (1,4)".
std::string to_text(const MarkedChain& c);

} // namespace kpieri
