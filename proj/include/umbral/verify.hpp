#ifndef UMBRAL_VERIFY_HPP
#define UMBRAL_VERIFY_HPP

#include "umbral/groups.hpp"
#include "umbral/mckay.hpp"

#include <optional>

namespace umbral {

/// Multiplicity generating series H^X_{chi,r} = (1/|G|) sum_g conj(chi(g)) H^X_{g,r}.
/// Coefficients are exact rationals; Theorem 1.1 is the statement that they
/// are non-negative integers for n > 0.
struct MultiplicitySeries {
    std::string X;
    size_t chi_index = 0;
    long r = 1;
    QSeries series;
};

MultiplicitySeries multiplicity_series(const std::string& X, size_t chi_index, long r,
                                       const Rational& trunc);

struct ReportEntry {
    std::string subject;                  // e.g. "chi=3,r=1" or class label
    std::string check;                    // "integral", "nonnegative", "reconstruction", ...
    bool pass = true;
    std::string detail;                   // first failure or context
};

struct Report {
    std::string X;
    std::string grade;                    // "evidence" or "proof" (Sturm reached)
    Rational bound_used;
    std::vector<ReportEntry> entries;
    size_t findings = 0;                  // failed entries

    void add(ReportEntry e);
    std::string json() const;             // machine-readable, byte-deterministic
};

/// N_chi = lcm{ n_g h_g : chi(g) != 0 }.
Int n_chi(const std::string& X, size_t chi_index);

/// Conservative Sturm bound ceil((k/12) [SL2(Z) : Gamma(L')]) with
/// L' = lcm(4m, N_chi) and index L'^3 prod_{p | L'} (1 - p^-2).
Int sturm_bound(long weight, const Int& level);

/// H_{g,r} = sum_chi chi(g) H_{chi,r} for all classes and r in I^X, exact.
Report reconstruct_check(const std::string& X, const Rational& trunc);

/// Integrality of every multiplicity coefficient and non-negativity for n > 0.
/// The polar -2 at (trivial chi, r^2 = 1 mod 4m, n = 0) is the one allowed
/// negative entry and is checked as such.
Report check_nonneg_integral(const std::string& X, long n_bound);

/// Registered coefficientwise identity suites ("mock-theta-A2^12").
Report identity_suite(const std::string& name);

/// CSV of multiplicity tables: columns n, then one per irreducible.
std::string multiplicity_csv(const std::string& X, long r, long n_bound);

} // namespace umbral

#endif
