#ifndef FOLINT_TEXTIO_HPP
#define FOLINT_TEXTIO_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "folint/dicritical.hpp"
#include "folint/expr.hpp"
#include "folint/numerics.hpp"
#include "folint/singular.hpp"
#include "folint/vfield.hpp"

namespace folint {

// Line-oriented "key: value" input. Blank lines and lines starting with '#'
// are skipped; keys repeat.
struct KeyValueLines {
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> first(const std::string& key) const;
    std::vector<std::string> all(const std::string& key) const;
};

KeyValueLines read_key_values(std::istream& in);

// "x,y,z" -> variable set.
VarSet parse_vars(const std::string& csv);

// "1.5", "-2i", "0.1+0.2i".
Cplx parse_complex(const std::string& text);

// Vector field from f1:/f2:/f3: lines over `vars`.
VectorField parse_field_lines(const KeyValueLines& kv, const VarSet& vars);

// Factored-pair file:
//   vars: x,y,z
//   h: <expr> ^(k,l)
//   f: <expr> ^a
//   g: <expr> ^b
//   F: <expr>            (optional, product cross-check)
//   G: <expr>            (optional)
struct FactoredPairFile {
    FactoredPair pair;
    std::optional<MPoly> product_f, product_g;
};
FactoredPairFile parse_factored_pair_file(const KeyValueLines& kv,
                                          const std::optional<VarSet>& vars_override);

// Ledger file:
//   degree: k
//   p<label>: lambda1 lambda2
// Eigenvalues parse exactly when written as integers or fractions, and as
// flagged approximations when written in decimal/scientific notation.
BaumBottLedger parse_ledger_file(const KeyValueLines& kv);

ExactOrApprox parse_eigenvalue(const std::string& tok);

}  // namespace folint

#endif
