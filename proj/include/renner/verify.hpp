#pragma once

// Property suites over desk-scale slices: characterization agreement, order
// axioms, chain structure, the extended Z-Lemma, the involution and
// longest-element (anti-)isomorphisms, and the transport theorem. Shared by
// the CLI `verify` subcommand and the acceptance tests.

#include <functional>
#include <string>
#include <vector>

#include "renner/oracle.hpp"
#include "renner/orbit.hpp"
#include "renner/transport.hpp"

namespace renner::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  long long cases = 0;
  // First counterexample as reproducible literals ("x=...; y=...; sign=..."),
  // or a skip notice.
  std::string detail;

  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}
};

struct Options {
  int slice_cap = 4;       // component length bound for orbit slices
  int bfs_cap = 24;        // saturation bound for longest-element searches
  int interval_cap = 64;   // cap handed to interval construction
  int group_cap = 8;       // transport: enumeration bound for the group
  int w_len_cap = 4;       // transport: length bound on w
  int transfer_samples = 40;            // chain-transfer quadruples per sign
  std::size_t max_chains_per_interval = 20000;
  int jobs = 1;
};

// Order definition variants (i)-(iv'), the normal-form characterizations
// where applicable, the partial-order axioms, length compatibility, the
// one-factor restriction tables and the extremal elements.
std::vector<CheckResult> characterizations(const OrbitContext& ctx, const Options& opts);

// Extended Z-Lemma on every precondition-satisfying triple, plus the
// chain-length transfer on sampled quadruples.
std::vector<CheckResult> zlemma(const OrbitContext& ctx, const Options& opts);

// Interval structure: generation by elementary relations, gradedness of
// covers, maximal-chain lengths, saturated chains.
std::vector<CheckResult> chain_checks(const OrbitContext& ctx, const Options& opts);

// The involution as an order isomorphism ++ <-> -- and automorphism of -+
// and +-, compatible with the extended lengths.
std::vector<CheckResult> involution_checks(const OrbitContext& ctx, const Options& opts);

// Longest-element maps for finite W; a skipped result when W does not
// saturate below opts.bfs_cap.
std::vector<CheckResult> w0_checks(const OrbitContext& ctx, const Options& opts);

// Transport witnesses and the peeling/cancellation corollaries on a group
// slice; no orbit context involved.
std::vector<CheckResult> transport_checks(const CoxeterSystem& sys, const Options& opts);

// Does elementary-relation reachability match the given order pairwise on
// the table's slice? Exposed separately so the harness can feed a faulty
// order and watch the counterexample reporting trip.
CheckResult compare_closure_with_order(
    const OrbitContext& ctx, const oracle::ClosureTable& table,
    const std::function<bool(const OrbitElt&, const OrbitElt&)>& order, const std::string& name);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace renner::verify
