#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rbx/hopf.hpp"

namespace rbx {

// An algebra (plus optional Hopf blocks) as loaded from an
// AlgebraSpecDocument. Axiom checks are deferred to the check command.
struct LoadedAlgebra {
    FiniteDimAlgebra algebra;
    std::optional<HopfAlgebra> hopf;
};

// The on-disk JSON format. Basis labels are the contract: "mult" holds
// [i, j, [[k, scalar], ...]] triples by label, "coproduct" holds
// [k, [[a, b, scalar], ...]], "counit" a sparse [label, scalar] row and
// "antipode" sparse columns [k, [[row, scalar], ...]].
nlohmann::ordered_json algebra_to_json(const FiniteDimAlgebra& algebra,
                                       const HopfAlgebra* hopf = nullptr);

LoadedAlgebra algebra_from_json(const nlohmann::json& doc);

// File helpers; throw std::invalid_argument with the path on failure.
LoadedAlgebra load_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const nlohmann::ordered_json& doc);

}  // namespace rbx
