#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "momentcf/contfrac.hpp"
#include "momentcf/mpoly.hpp"
#include "momentcf/rational.hpp"

namespace momentcf::cli {

inline constexpr std::size_t kDefaultN = 10;
inline constexpr std::size_t kDefaultDepth = 8;
inline constexpr std::size_t kDefaultOrder = 16;

/// Families accepted by --family, with their parameter names in order.
/// dumont_foata also accepts the single word "symbolic".
const std::map<std::string, std::vector<std::string>>& family_schemas();

/// Parses "k=v,k=v" into exact values; checks the keys against the family.
std::map<std::string, Rational> parse_params(const std::string& family, const std::string& text);

/// Sequence values 0..n of a family as "p/q" strings (polynomials for the
/// symbolic Dumont-Foata family). Index k is mu_k, G_{2k+2}, H_{2k+1}, B_k or
/// Gamma_{k+1} depending on the family.
std::vector<std::string> sequence(const std::string& family, const std::string& params, std::size_t n);

/// Coefficients mu_k/k! for k = 0..order.
std::vector<std::string> egf(const std::string& family, const std::string& params, std::size_t order);

struct CfCoefficients {
  char kind = 'J';
  std::vector<std::string> alphas;  // S-fractions
  std::vector<std::string> gammas;  // J-fractions
  std::vector<std::string> betas;
  bool terminates = false;
};

/// S- or J-fraction of a family's moment sequence with `depth` levels.
CfCoefficients continued_fraction(const std::string& family, const std::string& params, std::size_t depth, char kind);

/// Runs the command line `args` (without the program name). Results go to
/// `out`, reports and errors to `err`. Returns 0 on success, 1 when a
/// verification fails and 2 on usage or parameter errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace momentcf::cli
