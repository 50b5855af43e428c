#pragma once

#include <string>
#include <vector>

#include "extremal/chevalley.hpp"
#include "extremal/report.hpp"
#include "extremal/scalar.hpp"
#include "extremal/smallgen.hpp"

// Aggregated checks shared by the command line tool and the acceptance runner.
namespace extremal::suites {

// which: "lr" (r = 1..max_r, max_r <= 5), "rr" (r = 1..max_r, max_r <= 4), "rr-lengths" (r = max_r in {3,4}).
// Throws PreconditionNotMet on an unknown table or range.
Report tables(const std::string& which, int max_r);

Report mingen(char type, int rank, const Field& f);
Report mingen(const ChevalleyAlgebra& g);

// Extremal form, Killing form and the radical chain of a Chevalley algebra.
Report radicals(char type, int rank, const Field& f);
Report radicals(const ChevalleyAlgebra& g);
// Killing values and phi spectra on sl2 and sl3 pairs.
Report killing_examples();

// normalize, build_M, structure claims; case 2 adds the radical chain and fourth powers.
Report threegen(const smallgen::TriangleParams& p);

// Long root extremality, short root failures, B2/G2 decompositions, form symmetry and associativity.
Report extremal_check(char type, int rank, const Field& f);
Report extremal_check(const ChevalleyAlgebra& g);
// The example sl3 realization: parameters (-2,-2,-2; 0), form symmetric and associative.
Report sl3_example_check(const Field& f);

}  // namespace extremal::suites
