#pragma once

#include <string>

#include <json.hpp>

#include "olab/caps.hpp"
#include "olab/oracle.hpp"

namespace olab {

// Problem-specification document (JSON, version 1):
//   {
//     "version": 1, "N": 4, "M": 4,
//     "seed_model": {"kind": "iid" | "shared" | "explicit", "tables": [
//         {"k": 2, "support": [[0,0],[1,0]], "weights": ["1/2","1/2"]}]},
//     "oracles": [
//       {"name": "O_INV", "class": "INV", "prior": "1/2",
//        "constructor": {"kind": "shift-class", "N": 4, "family": "involutions"}},
//       {"name": "T", "class": "c0", "prior": "1/2",
//        "action": {"seeds": ["s0"], "table": [[[2,1],[1,2]]]}}
//     ]
//   }
// Constructor kinds: shift-class, shift-perms, xor-family, simon, hls.
// Explicit actions give table[seed][x] = image list; all explicit oracles in
// one document must declare the same seed labels.
OracleProblem problem_from_json(const nlohmann::json& document, const Caps& caps = {});
OracleProblem load_problem_file(const std::string& path, const Caps& caps = {});
OracleProblem load_problem_text(const std::string& text, const Caps& caps = {});

// Serializes with explicit action tables (constructors do not round-trip).
nlohmann::json problem_to_json(const OracleProblem& problem);

// Equality of observable structure: sizes, seed labels, classes, priors,
// per-seed marginals and full action tables. Oracle names are ignored.
bool structurally_equal(const OracleProblem& a, const OracleProblem& b);

}  // namespace olab
