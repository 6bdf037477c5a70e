#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystaldeg/crystal.hpp"
#include "crystaldeg/dualequiv.hpp"

namespace crystaldeg {

enum class SignatureMode { standard, parity };
enum class Strictness { require_01, allow_general };

struct ZeroWeightOptions {
    SignatureMode signature_mode = SignatureMode::standard;
    Strictness strictness = Strictness::require_01;
};

struct ZeroWeightSet {
    std::vector<int> vertices;  // indices into the crystal's vertex order
    // some string through a zero-weight vertex has two or more steps on each
    // side; no edge construction is defined there
    bool has_wide_strings = false;
};

// Vertices centered on every monochromatic string. require_01 keeps only those
// whose strings have at most one step each way; allow_general lists them all
// and flags the wide ones.
ZeroWeightSet zero_weight(const CrystalGraph& g, const ZeroWeightOptions& opts = {});

// Signature read off the string statistics: entry i is +1 iff one lowering
// step remains in color i. Parity mode multiplies entry i by (-1)^k with
// k = cells/degree, which conjugates the identified shape when k is even.
Signature induced_sigma(const CrystalGraph& g, int x, const ZeroWeightOptions& opts = {});

// The i-edge through a centered vertex: a four-step operator walk using colors
// i-1 and i, raising first in the color with the remaining lowering step.
std::optional<int> induced_d(const CrystalGraph& g, int x, int i,
                             const ZeroWeightOptions& opts = {});

// The signed colored graph induced on the zero-weight space.
SignedColoredGraph build_g_of_x(const CrystalGraph& g, const ZeroWeightOptions& opts = {});

struct IsoResult {
    bool found = false;
    std::vector<int> mapping;  // vertex of g1 -> vertex of g2
};

// Signature- and color-preserving isomorphism search.
IsoResult iso(const SignedColoredGraph& g1, const SignedColoredGraph& g2);

// Number of isomorphisms g1 -> g2, stopping once `cap` have been found.
int count_isomorphisms(const SignedColoredGraph& g1, const SignedColoredGraph& g2, int cap);

// The unique shape whose standard graph is isomorphic to g, if any.
std::optional<Partition> identify(const SignedColoredGraph& g);

struct VerifyResult {
    bool ok = false;
    std::string report;
};

// Labeled-graph equality of the induced zero-weight graph with the standard
// graph on the same tableaux.
VerifyResult verify_main(const Partition& lambda, int n);

// lambda = mu plus `columns` full columns of height n; checks which shape the
// induced graph identifies as, per the signature mode.
VerifyResult verify_addcol(const Partition& mu, int columns, int n,
                           const ZeroWeightOptions& opts = {});

}  // namespace crystaldeg
