#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nucleon/chains.hpp"
#include "nucleon/terms.hpp"

namespace nucleon {

/// A variety of BL-algebras presented by finitely many generating chains.
struct VarietyDescriptor {
    std::vector<ChainDescriptor> generators;
};

/// Membership flags for the five decision chains, computed at descriptor
/// level from the subalgebra structure of ordinal sums: a chain embeds into a
/// generator exactly when its component pattern appears among the generator's
/// components (positions >= 1 for the tail components).
struct VarietyFlags {
    bool has_s11 = false;    /// S1+S1: some bounded component in position >= 1
    bool has_s1w = false;    /// S1+Sw: an unbounded component, or a Chang
                             /// component, in position >= 1
    bool has_s1_chang = false; /// S1+S1w: a Chang component in position >= 1
    bool has_s11w = false;   /// S1+S1+Sw: bounded before unbounded (>= 1)
    bool has_s1w1 = false;   /// S1+Sw+S1: unbounded before bounded (>= 1)
    /// Stabilization exponents of elements of finite bounded components in
    /// position >= 1: {ceil(k/i) : 1 <= i <= k} for each S_k there.
    std::set<int> p;
    std::optional<int> m; /// max of p when p is nonempty
};

VarietyFlags compute_flags(const VarietyDescriptor& v);

enum class CatalogCase { I, II, III, IV };
std::string to_string(CatalogCase c);

struct CatalogEntry {
    std::string name; // "x", "~~x", "1", "s_m", "t_m"
    TermPtr term;
    bool nontrivial = false;
};

/// Which one-variable terms define nuclei on the variety.
struct NucleusCatalog {
    CatalogCase case_id = CatalogCase::I;
    std::optional<int> m;
    std::vector<CatalogEntry> entries;
    /// On purely involutive varieties ~~x collapses to x.
    bool double_neg_equals_identity = false;
};

/// Decide the catalog from the flags:
///   case I    only x, ~~x, 1 (any of: neither s11 nor s1w; exactly one of
///             them; a Chang tail; or both orders bounded/unbounded present)
///   case II   bounded tails always precede unbounded ones: add s_m
///   case III  unbounded tails always precede bounded ones: add t_m
///   case IV   no generator mixes tail kinds: add both s_m and t_m
NucleusCatalog catalog_from_flags(const VarietyFlags& f, bool pure_mv);
NucleusCatalog classify(const VarietyDescriptor& v);

/// Structural criterion for s_m being a nucleus: no Chang tail and no
/// unbounded-before-bounded pattern. Dually for t_m with the orders swapped.
bool s_m_expected_nucleus(const VarietyFlags& f);
bool t_m_expected_nucleus(const VarietyFlags& f);

enum class CheckStatus { Ok, Failed, InconclusiveWindow };
std::string to_string(CheckStatus s);

struct VerificationCheck {
    std::string generator; // descriptor text; empty for variety-wide checks
    std::string term;
    std::string expectation; // what was being established
    CheckStatus status = CheckStatus::Ok;
    std::string witness; // populated for counterexamples and found witnesses
};

struct VerificationReport {
    int window = 0;
    NucleusCatalog catalog;
    std::vector<VerificationCheck> checks;
    bool all_ok() const;
};

/// Cross-validate the catalog by direct computation on each generator:
/// every catalog term must pass the nucleus-term criterion (windowed on
/// infinite chains); every candidate among {s_m, t_m} outside the catalog is
/// either refuted by an explicit counterexample within the window (when the
/// structural criterion predicts failure) or shown to collapse to a trivial
/// nucleus; nontrivial entries must come with witnesses separating them from
/// x and from ~~x. A missing expected counterexample or witness is reported
/// as InconclusiveWindow, never as silent success.
VerificationReport verify_classification(const VarietyDescriptor& v, int window);

} // namespace nucleon
