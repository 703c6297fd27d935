#ifndef BMLAB_GALVIN_HPP
#define BMLAB_GALVIN_HPP

// Galvin's coding on the Baire space: NONEMPTY folds the whole history into
// her moves, so the last two EMPTY moves are enough to rebuild it.
//
// For a basic clopen V = [s] the members of the pi-base above V are its
// prefixes [s|0], ..., [s|len(s)]. A set F of them is coded as the child
// [s ^ m] with bit i of m set iff [s|i] is in F. Distinct masks give
// disjoint children, so psi_V is an injection into a cellular family
// inside V.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmlab/game.hpp"
#include "bmlab/regions.hpp"

namespace bmlab {

/// EMPTY's play was not produced against this coding.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

class BaireCodedBase {
 public:
  using Region = BaireRegion;

  /// Every basic clopen is a member.
  bool member(const Region&) const { return true; }
  /// Prefixes of V, shortest first; always ends with V itself.
  std::vector<Region> supersets(const Region& V) const;
  /// V ^ mask(F). Throws Error if some member of F is not a prefix of V.
  Region psi(const Region& V, std::span<const Region> F) const;
  /// F with psi(V, F) == W, shortest first, or nullopt if W is not in the range.
  std::optional<std::vector<Region>> psi_invert(const Region& V, const Region& W) const;
  /// The member of range(psi_V) containing U, or nullopt.
  std::optional<Region> range_member_containing(const Region& V, const Region& U) const;
  /// Identity on basic clopens.
  Region pi(const Region& U) const { return U; }
  /// For a finite union of basic clopens: the shortest member, ties broken
  /// lexicographically (over an infinite alphabet no shorter clopen fits).
  Region pi(std::span<const Region> union_of) const;
  bool is_subset(const Region& a, const Region& b) const { return system_.is_subset(a, b); }

 private:
  BaireSystem system_;
};

/// NONEMPTY full-history strategies usable as sigma. Ids: "closure"
/// (append 0) and "round-tag" (append the round number).
Strategy<BaireRegion> sigma_by_id(const std::string& id);
std::vector<std::string> sigma_ids();

/// The auxiliary play: hats[i] = psi_{pi(U_i)}({pi(U_0), ..., pi(U_i)}) and
/// vs[i] = sigma(hats[0], vs[0], ..., hats[i]).
struct HatPlay {
  std::vector<BaireRegion> hats;
  std::vector<BaireRegion> vs;
};

/// `pis` holds pi(U_0), ..., pi(U_n). Throws Error if the sequence is not a
/// legal play against the V's it produces.
HatPlay hat_simulation(const BaireCodedBase& base, std::span<const BaireRegion> pis,
                       const Strategy<BaireRegion>& sigma);

/// Recovers [pi(U_0), ..., pi(U_prev)] from two consecutive EMPTY moves,
/// ordered by strict reverse inclusion. Throws DecodeFailure.
std::vector<BaireRegion> decode_history(const BaireCodedBase& base, const BaireRegion& U_prev,
                                        const BaireRegion& U_cur);

/// The 2-tactic built from sigma.
KTactic<BaireRegion> galvin_two_tactic(const BaireCodedBase& base, Strategy<BaireRegion> sigma);

struct RoundAudit {
  std::size_t n = 0;
  std::vector<BaireRegion> recovered;
  std::vector<BaireRegion> hats;
  std::vector<BaireRegion> vs;
  bool history_match = false;
  bool hat_match = false;
  bool v_match = false;
  std::string failure;  // decode failure message, if any
};

struct DecodeAudit {
  std::vector<RoundAudit> rounds;  // one per round n >= 2
  bool aux_legal = false;      // hats and vs form a legal nested play
  bool v_chain_equal = false;  // real game's V chain equals the auxiliary one
  bool chain_law = false;      // pi(U_i) strictly contains hat_i, which contains pi(U_{i+1})
  bool all_match = false;
  std::optional<std::size_t> first_mismatch;
};

DecodeAudit audit_play(const BaireCodedBase& base, const Strategy<BaireRegion>& sigma,
                       const Transcript<BaireRegion>& transcript);

nlohmann::ordered_json round_audit_json(const RoundAudit& r);
nlohmann::ordered_json audit_json(const DecodeAudit& audit);

/// One refereed game: seeded random EMPTY against the 2-tactic.
Transcript<BaireRegion> galvin_game(std::uint64_t seed, std::size_t horizon, const std::string& sigma_id);

struct GalvinBatchReport {
  std::size_t games = 0;
  std::size_t all_match = 0;
  std::size_t decode_fidelity = 0;  // every round's recovered history matched
  std::size_t v_chain_equal = 0;
  std::size_t certified = 0;
  std::size_t illegal = 0;
  std::uint64_t digest = 0;               // FNV-1a over all transcripts, in seed order
  std::vector<std::uint64_t> mismatched;  // seeds with any mismatch

  friend bool operator==(const GalvinBatchReport&, const GalvinBatchReport&) = default;
};

/// Games with seeds seed, seed+1, ..., audited; parallel over games.
GalvinBatchReport galvin_batch(std::uint64_t seed, std::size_t games, std::size_t horizon, const std::string& sigma_id);

namespace reference {
GalvinBatchReport galvin_batch(std::uint64_t seed, std::size_t games, std::size_t horizon, const std::string& sigma_id);
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace bmlab

#endif  // BMLAB_GALVIN_HPP
