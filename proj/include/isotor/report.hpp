#ifndef ISOTOR_REPORT_HPP
#define ISOTOR_REPORT_HPP

#include "isotor/json_io.hpp"
#include "isotor/modgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isotor {

/// One named check with a PASS / FAIL / PRECISION-LIMITED verdict. FAIL always
/// carries a concrete witness; PRECISION-LIMITED marks an infinite condition
/// that held throughout a finite scan.
struct Verdict {
    std::string check;
    std::string status;
    std::string witness;
};

struct RunReport {
    std::string command;
    Json inputs = Json::object();
    std::vector<Verdict> verdicts;
    Json payload = Json::object();
    std::optional<unsigned long> seed;
    long timing_ms = 0;

    void add(const std::string& check, bool pass, const std::string& witness,
             bool precision_limited = false);
    bool has_fail() const;
    std::size_t count(const std::string& status) const;
    /// Deterministic encoding: timing is excluded so reports are byte-identical
    /// across runs for fixed (command, inputs, seed).
    Json to_json() const;
    std::string human() const;
};

RunReport cmd_classgroup(long p);
RunReport cmd_oracle(long prec);
RunReport cmd_theta(long p, long prec, std::optional<long> class_index = std::nullopt);
RunReport cmd_kernel(long p, long prec);
RunReport cmd_verify(long p, long prec);
RunReport cmd_hecke(long p, long n1, long n2, long prec);
RunReport cmd_kernel_test(long p, long eps, long prec);
RunReport cmd_hsub(long p, long prec);
RunReport cmd_level_change(long N, long d, long bound = kDefaultGroupBound);
/// Structural probe of the composite-level decomposition: checks that kernels
/// of reductions at distinct primes generate the kernel of the joint
/// reduction. Reports only "no counterexample found" up to the bound.
RunReport cmd_level_change_search(long maxN, long bound = kDefaultGroupBound);
RunReport cmd_cosets(long n1, long n2, long N, long trials, unsigned long seed);

} // namespace isotor

#endif
