#pragma once

#include <string>

#include "smar/arith.hpp"

namespace smar {

enum class OutcomeKind { found, not_found_within, provably_none };

// Result of a bounded minimal-witness search.
struct SearchOutcome {
    OutcomeKind kind;
    u64 value = 0;       // present iff found
    u64 bound = 0;       // present iff not_found_within
    std::string reason;  // present iff provably_none

    static SearchOutcome found(u64 v) { return {OutcomeKind::found, v, 0, {}}; }
    static SearchOutcome not_found_within(u64 b) { return {OutcomeKind::not_found_within, 0, b, {}}; }
    static SearchOutcome provably_none(std::string r) { return {OutcomeKind::provably_none, 0, 0, std::move(r)}; }

    friend bool operator==(const SearchOutcome&, const SearchOutcome&) = default;
};

std::string to_string(const SearchOutcome& o);

inline constexpr u64 kDefaultSearchBound = 100000; // SK/SW candidate cap
inline constexpr u64 kDefaultPrimeBound = 997;     // SNTP primorial cap

// m!! reduced mod n (1*3*5*...*m or 2*4*6*...*m).
u64 double_factorial_mod(u64 m, u64 n);

// Smallest m with n | m!!; both parities scanned in increasing m.
u64 sdf(u64 n);

// !m = 0! + 1! + ... + (m-1)!, reduced mod p in one incremental pass.
u64 left_factorial_mod(u64 m, u64 p);

// Smarandache-Kurepa: smallest m with p | !m.  Residues stabilize once
// m >= p, so a stable nonzero residue is a proof of nonexistence.
SearchOutcome sk(u64 p, u64 bound = kDefaultSearchBound);

// W(m) = 1! + 2! + ... + m!, reduced mod p.
u64 factorial_sum_mod(u64 m, u64 p);

// Smarandache-Wagstaff: smallest m with p | W(m); same stabilization exit.
SearchOutcome sw(u64 p, u64 bound = kDefaultSearchBound);

// Ceil function of k-th order: smallest x with n | x^k.
// Closed form: product of p^ceil(e/k) over the factorization of n.
u64 ceil_s(u64 n, u64 k);

// Pseudo-Smarandache: smallest m with n | 1+2+...+m; always <= 2n-1.
u64 z(u64 n);

// Near-to-primorial: smallest prime p <= prime_bound with
// n | p#-1, n | p#, or n | p#+1.  When 4 | n no witness exists:
// p# is squarefree and p# +/- 1 is odd.
SearchOutcome sntp(u64 n, u64 prime_bound = kDefaultPrimeBound);

inline constexpr const char* kReasonStableResidue = "stable-nonzero-residue";
inline constexpr const char* kReasonFourDividesN = "four-divides-n-primorial-squarefree";

} // namespace smar
