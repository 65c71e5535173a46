#pragma once

#include "gridndp/bigint.hpp"

#include <string>
#include <vector>

namespace gridndp {

enum class Mode { paper, compact };

struct Profile {
    Mode mode = Mode::compact;
    Rational epsilon{1, 10};
    BigInt h = 3;
    Rational delta{0};
    // compact only
    Rational kappa{1};
    Rational lp_mult{1, 6};  // L'_i = lp_mult * N_i^lp_pow, rounded up to even
    int lp_pow = 2;
    BigInt h_mult = 20;      // H_i = h_mult * N_i

    static Profile paper(const Rational& epsilon);
    static Profile compact(const Rational& epsilon, const BigInt& h, const Rational& kappa);

    bool operator==(const Profile&) const = default;
};

Profile parse_profile(const std::string& text);
std::string format_profile(const Profile& p);

struct Level {
    Rational N, Np, g, c, H, L, Lp;  // c is 0 at level 0 (undefined)
};

struct Schedule {
    Profile profile;
    int n = 0;
    std::vector<Level> levels;

    const Level& at(int i) const { return levels.at(i); }
    int max_level() const { return static_cast<int>(levels.size()) - 1; }
    // Length of the B^V / B^C blocks inside a level-i box (9N^3 in paper mode).
    Rational block_length(int i) const;
    // Fingerprint of the canonical text form (FNV-1a, hex).
    std::string digest() const;
    std::string canonical_text() const;
};

// Throws std::invalid_argument on a profile or n violation.
Schedule compute_schedule(const Profile& p, int n, int levels);

struct LedgerEntry {
    int id = 0;
    std::string name;
    Rational lhs, rhs;
    bool holds = false;
    bool gating = true;  // false: informational under this profile
    std::string anchor;
};

struct LedgerReport {
    int level = 0;
    std::vector<LedgerEntry> entries;
    bool ok() const;  // every gating entry holds
    const LedgerEntry& entry(int id) const { return entries.at(id - 1); }
};

// Entries for the step that builds level i+1 from level-i children.
LedgerReport check_ledger(const Schedule& s, int i);

std::string format_ledger(const LedgerReport& r);

}  // namespace gridndp
