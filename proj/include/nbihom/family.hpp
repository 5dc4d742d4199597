#pragma once

#include "nbihom/algebra.hpp"
#include "nbihom/axioms.hpp"
#include "nbihom/constructions.hpp"
#include "nbihom/poly.hpp"
#include "nbihom/report.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nbihom {

struct Parameter {
    std::string name;
    std::vector<Rational> grid;
};

// An algebra whose map entries, structure constants, and optional tau are
// polynomials in named parameters, each with a finite evaluation grid.
struct ParamFamily {
    Algebra<Poly> algebra;
    std::vector<Parameter> parameters;

    // Dimensional validity plus: parameter names unique and non-empty, every
    // declared parameter used somewhere, every variable declared. Grid
    // emptiness is a file-format invariant enforced at load time, not here,
    // so in-memory sweeps over an emptied grid stay expressible.
    void validate() const;
};

using Assignment = std::map<std::string, Rational>;

const std::vector<Rational>& default_grid();

// Substitutes the assignment into every slot. All declared parameters must be
// assigned; extra keys are ignored.
QAlgebra instantiate(const ParamFamily& family, const Assignment& assignment);

struct SweepRow {
    Assignment assignment;
    std::vector<CheckReport> reports;
};

struct SweepResult {
    std::vector<std::string> axioms;
    std::vector<SweepRow> rows;
    std::uint64_t grid_size = 0; // full grid cardinality
    std::uint64_t evaluated = 0; // rows after cap sampling

    bool all_pass() const {
        for (const auto& row : rows)
            for (const auto& r : row.reports)
                if (!r.pass) return false;
        return true;
    }
};

// Runs the axioms (default: the flavor's suite, honoring a waived
// multiplicativity) at grid points in lexicographic order of the declared
// parameters. When the grid exceeds cap, every ceil(N/cap)-th point is taken;
// cap 0 means no cap.
SweepResult sweep(const ParamFamily& family, std::vector<std::string> axioms = {},
                  std::uint64_t cap = 2000, Exec exec = Exec::Parallel);

// Defects of one axiom at one grid point; axiom "induced-bracket" lists the
// nonzero entries of phi_tau instead (empty iff the induced bracket vanishes).
std::vector<Defect> residuals(const ParamFamily& family, const Assignment& assignment,
                              const std::string& axiom, Exec exec = Exec::Parallel);

// Symbolic phi_tau: the induced (n+1)-ary family with tau's fresh variables
// joining the parameter list on the default grid. With verify set, regime
// conditions and the induced suite are checked at sampled grid points.
ParamFamily induce_family(const ParamFamily& family, const std::vector<Poly>& tau, Regime regime,
                          bool verify = true, std::uint64_t cap = 2000, Exec exec = Exec::Parallel);

} // namespace nbihom
