// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "antisym/embedding.hpp"
#include "antisym/encoder.hpp"
#include "antisym/enumeration.hpp"
#include "antisym/hamel.hpp"
#include "antisym/verify.hpp"

using namespace antisym;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Every campaign report produced along the way, for the equal-n criterion.
std::vector<VerificationReport> g_reports;

std::uint64_t count_check(const VerificationReport& r, const std::string& check) {
  return std::count_if(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.check == check; });
}

std::string first_violation(const VerificationReport& r) {
  if (r.violations.empty()) return "";
  const auto& v = r.violations.front();
  return " first: " + v.check + " x=" + v.x + " s=" + v.s + " " + v.detail;
}

bool run_criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = seconds < limit_s;
  const bool ok = out.ok && in_time;
  std::printf("%s [%d] %s: %s; %.2f s (limit %.0f s)%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), out.detail.c_str(),
              seconds, limit_s, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
  return ok;
}

std::vector<Label> labels(std::initializer_list<const char*> bits) {
  std::vector<Label> out;
  for (const char* b : bits) out.push_back(Label::parse(b));
  return out;
}

// ---------------------------------------------------------------------------

VerificationReport g_exhaustive;

Outcome exhaustive_lemma() {
  g_exhaustive = exhaustive_lemma_check(labels({"", "1"}), 5);
  g_reports.push_back(g_exhaustive);
  const auto& r = g_exhaustive;
  const bool ok = r.count("vectors") == 25 && r.count("pairs_enumerated") == 625 && r.pass();
  return {ok, std::to_string(r.count("vectors")) + " vectors, " + std::to_string(r.count("pairs_enumerated")) +
                  " ordered pairs, " + std::to_string(r.count("antecedent_held")) + " with the antecedent, " +
                  std::to_string(r.violations.size()) + " violations" + first_violation(r)};
}

Outcome branch_coverage() {
  const auto random = random_lemma_campaign(labels({"", "000000001", "1"}), 8, 10'000, 0);
  g_reports.push_back(random);
  std::string detail;
  bool ok = g_exhaustive.pass() && random.pass() && random.pairs_checked == 10'000;
  for (ProofBranch b : kAllBranches) {
    const std::uint64_t hits = g_exhaustive.branch_count(b) + random.branch_count(b);
    ok = ok && hits >= 50;
    detail += std::string(to_string(b)) + "=" + std::to_string(hits) + " ";
  }
  detail += "(min 50); " + std::to_string(g_exhaustive.violations.size() + random.violations.size()) + " violations" +
            first_violation(random);
  return {ok, detail};
}

HamelVector random_small_x(std::mt19937_64& rng) {
  static const std::vector<Label> pool = labels({"", "1", "01", "11", "001", "011"});
  for (;;) {
    std::vector<Label> chosen = pool;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    HamelVector x;
    for (std::size_t t = 0; t < terms; ++t) {
      x.accumulate(chosen[t], enumerate(std::uniform_int_distribution<std::uint64_t>(1, 6)(rng)));
    }
    if (n_of(x) <= 4) return x;
  }
}

Outcome containment() {
  std::mt19937_64 rng(2024);
  std::uint64_t samples = 0, violations = 0, predicate_hits = 0, exceptional = 0;
  std::map<std::size_t, int> n_histogram;
  std::string first;
  for (int k = 0; k < 50; ++k) {
    const HamelVector x = random_small_x(rng);
    const std::size_t n = n_of(x);
    std::uint64_t expected = 1;
    for (std::size_t t = 0; t < x.support_size(); ++t) expected *= n;
    if (z_set(x).size() != expected) {
      ++violations;
      if (first.empty()) first = " first: cardinality x=" + to_string(x);
    }
    ContainmentConfig config;
    config.sample_count = 10'000;
    config.seed = 1000 + k;
    const auto r = containment_campaign(x, config);
    g_reports.push_back(r);
    samples += r.count("samples_checked");
    predicate_hits += r.count("predicate_true");
    exceptional += r.exceptional.size();
    violations += r.violations.size();
    if (first.empty() && !r.violations.empty()) first = first_violation(r);
    ++n_histogram[n];
  }
  std::string hist;
  for (const auto& [n, c] : n_histogram) hist += " n=" + std::to_string(n) + ":" + std::to_string(c);
  return {violations == 0 && samples == 50 * 10'000ull,
          "50 points (" + hist.substr(1) + "), " + std::to_string(samples) + " samples outside Z, " +
              std::to_string(predicate_hits) + " predicate hits inside Z, " + std::to_string(exceptional) +
              " close members of Z, " + std::to_string(violations) + " violations" + first};
}

Coordinate random_coordinate(std::mt19937_64& rng, std::size_t i) {
  std::set<CoordinateEntry> entries;
  const int count = std::uniform_int_distribution<int>(0, 2)(rng);
  std::bernoulli_distribution bit(0.5);
  for (int c = 0; c < count; ++c) {
    CoordinateEntry e;
    for (std::size_t b = 0; b < i; ++b) e.zeta.push_back(bit(rng) ? '1' : '0');
    e.parity = bit(rng) ? 1 : 0;
    e.k_eta = KSet(i);
    e.k_xi = KSet(i);
    for (std::size_t b = 0; b < i; ++b) {
      if (bit(rng)) e.k_eta.insert(b);
      if (bit(rng)) e.k_xi.insert(b);
    }
    entries.insert(std::move(e));
  }
  return Coordinate(entries.begin(), entries.end());
}

std::vector<Coordinate> random_coords(std::mt19937_64& rng) {
  const std::size_t length = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  std::vector<Coordinate> coords;
  for (std::size_t i = 0; i < length; ++i) coords.push_back(random_coordinate(rng, i));
  return coords;
}

bool power_of_three(BigInt d) {
  while (d % 3 == 0) d /= 3;
  return d == 1;
}

std::string point_key(const CodePoint& p) {
  std::string key;
  const auto last = p.last_nonempty();
  if (!last) return key;
  for (std::size_t i = 0; i <= *last; ++i) {
    for (const auto& e : p.at(i)) {
      key += e.zeta + "," + std::to_string(e.parity) + "," + e.k_eta.to_mask_string() + "," +
             e.k_xi.to_mask_string() + ";";
    }
    key += "|";
  }
  return key;
}

Outcome embedding_modulus() {
  std::mt19937_64 rng(77);
  std::uint64_t failures = 0, triggered = 0;
  for (int k = 0; k < 500; ++k) {
    const auto a = random_coords(rng);
    auto b = random_coords(rng);
    if (k % 2 == 0) {
      // Share a random prefix so that close pairs occur.
      const std::size_t keep = std::uniform_int_distribution<std::size_t>(0, a.size())(rng);
      b.assign(a.begin(), a.begin() + keep);
      for (std::size_t i = keep; i < 4; ++i) b.push_back(random_coordinate(rng, i));
    }
    const CodePoint s(a), t(b);
    const Rational diff = (embed(s) - embed(t)).abs();
    const auto first_diff = first_differing_coordinate(s, t);
    for (std::size_t bound = 0; bound <= 5; ++bound) {
      if (diff < pow3_inverse(block_offset(bound))) {
        ++triggered;
        if (first_diff && *first_diff < bound) ++failures;
      }
    }
    if (first_diff && diff < pow3_inverse(block_offset(*first_diff + 1))) ++failures;
    if (!first_diff && !diff.is_zero()) ++failures;
  }

  std::unordered_set<std::string> keys;
  std::vector<Rational> values;
  std::uint64_t out_of_range = 0, bad_denominator = 0;
  while (keys.size() < 10'000) {
    const CodePoint p(random_coords(rng));
    if (!keys.insert(point_key(p)).second) continue;
    Rational v = embed(p);
    if (v.sign() < 0 || v >= Rational(1)) ++out_of_range;
    if (!power_of_three(v.denominator())) ++bad_denominator;
    values.push_back(std::move(v));
  }
  std::sort(values.begin(), values.end());
  const auto collisions = values.size() - (std::unique(values.begin(), values.end()) - values.begin());
  const bool ok = failures == 0 && collisions == 0 && out_of_range == 0 && bad_denominator == 0;
  return {ok, "500 pairs (" + std::to_string(triggered) + " bound hits, " + std::to_string(failures) +
                  " modulus failures); 10000 distinct points, " + std::to_string(collisions) + " collisions, " +
                  std::to_string(out_of_range) + " outside [0,1), " + std::to_string(bad_denominator) +
                  " non-3-power denominators"};
}

Outcome rational_enumeration() {
  constexpr std::uint64_t kCount = 100'000;
  std::uint64_t mismatches = 0;
  std::unordered_set<Rational> seen;
  for (std::uint64_t j = 0; j < kCount; ++j) {
    const Rational q = enumerate(j);
    const RationalIndex back = index_of(q);
    if (!back.fits_u64() || back.to_u64() != j) ++mismatches;
    seen.insert(q);
  }
  const bool zero_first = enumerate(std::uint64_t{0}).is_zero();
  return {mismatches == 0 && seen.size() == kCount && zero_first,
          std::to_string(mismatches) + " round-trip mismatches below 10^5, " + std::to_string(seen.size()) +
              " distinct values, q0 = " + enumerate(std::uint64_t{0}).to_string()};
}

Outcome zero_point() {
  const HamelVector zero;
  const auto z = z_set(zero);
  ContainmentConfig config;
  config.sample_count = 1000;
  config.seed = 6;
  const auto r = containment_campaign(zero, config);
  g_reports.push_back(r);
  const bool ok = z.size() == 1 && z.front().is_zero() && delta(zero) == Rational(1, 2) &&
                  epsilon(zero) == pow3_inverse(18) && r.count("samples_checked") == 1000 && r.pass();
  return {ok, "z_set(0) has " + std::to_string(z.size()) + " element; 1000 samples, distance >= 1/2 and gap >= 3^-18, " +
                  std::to_string(r.violations.size()) + " violations" + first_violation(r)};
}

Outcome equal_n() {
  std::uint64_t close = 0, violations = 0, pairs = 0;
  for (const auto& r : g_reports) {
    close += r.count("close_pairs");
    violations += count_check(r, "equal_n");
    pairs += r.pairs_checked;
  }
  return {violations == 0 && !g_reports.empty(),
          std::to_string(g_reports.size()) + " campaigns, " + std::to_string(pairs) + " pairs, " +
              std::to_string(close) + " closer than delta, " + std::to_string(violations) + " with n_{x-s} != n_{x+s}"};
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "exhaustive lemma", 10, exhaustive_lemma);
  ok &= run_criterion(2, "branch coverage", 60, branch_coverage);
  ok &= run_criterion(3, "containment", 300, containment);
  ok &= run_criterion(4, "embedding modulus", 60, embedding_modulus);
  ok &= run_criterion(5, "rational enumeration", 10, rational_enumeration);
  ok &= run_criterion(6, "zero point", 30, zero_point);
  ok &= run_criterion(7, "equal-n side condition", 1, equal_n);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
