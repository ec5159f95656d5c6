#pragma once

#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pbe/ciphertext.hpp"
#include "pbe/improved.hpp"
#include "pbe/original.hpp"
#include "pbe/stats.hpp"

// Active-attacker harness. Success is observational: an attack works when the
// targeted recipient returns a message instead of failing.
namespace pbe::adversary {

struct AttackOutcome {
  std::string attack_name;
  SchemeTag target_scheme = SchemeTag::original;
  bool accepted_by_recipient = false;
  std::optional<Bytes> recovered_message;
  OpCounters counters;
};

inline AttackOutcome observe(std::string name, SchemeTag scheme, std::optional<Bytes> result,
                             const OpCounters& counters) {
  AttackOutcome o;
  o.attack_name = std::move(name);
  o.target_scheme = scheme;
  o.accepted_by_recipient = result.has_value();
  o.recovered_message = std::move(result);
  o.counters = counters;
  return o;
}

/// Runs the honest original-scheme encryptor with the adversary's own fresh
/// one-time key. Nothing in the result ties it to any broadcaster.
inline BroadcastCiphertext forge_origin(const SystemParams& params, const RecipientSet& recipients,
                                        ByteView adversary_message, RandomSource& rng) {
  OpCounters scratch;
  return original::encrypt(params, recipients, adversary_message, rng, scratch);
}

/// Improved-format forgery: the man in the middle signs with a broadcaster
/// key of its own, since it cannot replace the recipients' trusted pk_B.
inline BroadcastCiphertext forge_origin_improved(const SystemParams& params, const RecipientSet& recipients,
                                                 ByteView adversary_message, RandomSource& rng) {
  OpCounters scratch;
  auto impostor = improved::keygen_broadcaster(params, rng);
  return improved::encrypt(params, recipients, adversary_message, impostor, rng, scratch);
}

enum class SpliceVariant {
  copy_sigma,  // keep the honest sigma
  resign,      // sign the new body under a fresh adversary key
};

inline const char* variant_name(SpliceVariant v) { return v == SpliceVariant::copy_sigma ? "copy-sigma" : "resign"; }

/// Reuses every component of an honest ciphertext with a new C2 carrying the
/// adversary's message under a key the adversary chose.
inline BroadcastCiphertext splice_component(const SystemParams& params, const BroadcastCiphertext& honest,
                                            ByteView adversary_message, SpliceVariant variant, RandomSource& rng) {
  OpCounters scratch;
  BroadcastCiphertext forged;
  forged.scheme = honest.scheme;
  forged.c1 = honest.c1;
  shuffle(std::span(forged.c1), rng);
  forged.c2 = sym_enc(SymmetricKey::random(rng), adversary_message, rng, scratch);
  if (variant == SpliceVariant::copy_sigma) {
    forged.sigma = honest.sigma;
  } else if (honest.scheme == SchemeTag::original) {
    auto ots = OneTimeKeyPair::generate(params, rng, scratch);
    forged.sigma = ots.sign(forged.signed_payload(), scratch);
  } else {
    auto impostor = improved::keygen_broadcaster(params, rng);
    forged.sigma = sig_sign(params, impostor.sk, forged.signed_payload(), scratch);
  }
  return forged;
}

enum class Role { member, non_member };

inline const char* role_name(Role r) { return r == Role::member ? "member" : "nonmember"; }
inline const char* mode_name(RejectMode m) { return m == RejectMode::strict ? "strict" : "permissive"; }

struct CostConfig {
  SchemeTag scheme = SchemeTag::original;
  std::size_t n = 8;
  Role role = Role::non_member;
  RejectMode mode = RejectMode::permissive;
  std::size_t trials = 1000;
};

inline constexpr std::size_t kMaxRecipients = 32;
inline constexpr std::size_t kMinTrials = 100;

class InvalidConfiguration : public Error {
 public:
  using Error::Error;
};

/// Exact mean: sum over count.
struct Mean {
  std::uint64_t sum = 0;
  std::uint64_t count = 0;
  double value() const { return count == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(count); }
};

struct TrialRecord {
  std::size_t trial = 0;
  OpCounters counters;
  bool recovered = false;
};

struct CostReport {
  CostConfig config;
  std::vector<TrialRecord> trials;
  /// Improved scheme: header matches that did not belong to the recipient.
  std::uint64_t header_false_matches = 0;
  /// Trials where a member did not recover M or a non-member did.
  std::uint64_t wrong_outcomes = 0;

  Mean mean(std::uint64_t OpCounters::*field) const {
    Mean m;
    m.count = trials.size();
    for (const auto& t : trials) m.sum += t.counters.*field;
    return m;
  }
};

namespace detail {

/// Independent per-trial stream so trial i does not depend on trial i-1.
inline SeededRandom trial_stream(const Digest& base, std::uint64_t trial) {
  Bytes material(base.begin(), base.end());
  put_u64(material, trial);
  return SeededRandom(sha256(material));
}

inline Digest draw_base(RandomSource& rng) {
  Digest base{};
  rng.fill(base);
  return base;
}

inline std::vector<RecipientKeyPair> fresh_recipients(const SystemParams& params, std::size_t n, RandomSource& rng) {
  std::vector<RecipientKeyPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(pke_gen(params, rng));
  return out;
}

inline RecipientSet set_of(const SystemParams& params, const std::vector<RecipientKeyPair>& kps) {
  std::vector<RecipientPublicKey> pks;
  pks.reserve(kps.size());
  for (const auto& kp : kps) pks.push_back(kp.pk);
  return RecipientSet(params, std::move(pks));
}

inline BroadcastCiphertext encrypt_any(const SystemParams& params, SchemeTag scheme, const RecipientSet& s,
                                       ByteView m, const BroadcasterKeyPair& bkp, RandomSource& rng) {
  OpCounters scratch;
  return scheme == SchemeTag::original ? original::encrypt(params, s, m, rng, scratch)
                                       : improved::encrypt(params, s, m, bkp, rng, scratch);
}

inline std::optional<Bytes> decrypt_any(const SystemParams& params, const RecipientSecretKey& sk,
                                        const BroadcasterPublicKey& trusted, const BroadcastCiphertext& ct,
                                        RejectMode mode, OpCounters& counters) {
  return ct.scheme == SchemeTag::original ? original::decrypt(params, sk, ct, mode, counters)
                                          : improved::decrypt(params, sk, trusted, ct, mode, counters);
}

}  // namespace detail

/// Each trial encrypts a fixed message to a fresh set of n recipients and
/// records the designated recipient's decryption counters.
inline CostReport run_cost_experiment(const SystemParams& params, const CostConfig& config, RandomSource& rng) {
  if (config.n < 1 || config.n > kMaxRecipients) throw InvalidConfiguration("n must be in [1, 32]");
  if (config.trials < kMinTrials) throw InvalidConfiguration("at least 100 trials are required");
  static const Bytes message = to_bytes("cost experiment broadcast payload");

  CostReport report;
  report.config = config;
  report.trials.reserve(config.trials);
  const auto base = detail::draw_base(rng);
  const auto broadcaster = improved::keygen_broadcaster(params, rng);

  for (std::size_t t = 0; t < config.trials; ++t) {
    auto trng = detail::trial_stream(base, t);
    auto recipients = detail::fresh_recipients(params, config.n, trng);
    auto ct = detail::encrypt_any(params, config.scheme, detail::set_of(params, recipients), message, broadcaster, trng);
    auto designated = config.role == Role::member ? recipients.front() : pke_gen(params, trng);

    TrialRecord rec;
    rec.trial = t;
    auto m = detail::decrypt_any(params, designated.sk, broadcaster.pk, ct, config.mode, rec.counters);
    rec.recovered = m.has_value();
    const bool expected = config.role == Role::member;
    if (rec.recovered != expected || (m && *m != message)) ++report.wrong_outcomes;
    if (config.scheme == SchemeTag::improved) {
      const std::uint64_t own = rec.recovered ? 1 : 0;
      report.header_false_matches += rec.counters.header_matches > own ? rec.counters.header_matches - own : 0;
    }
    report.trials.push_back(rec);
  }
  return report;
}

struct PrivacyOptions {
  std::size_t length_sets = 100;
  std::size_t ordering_trials = 12000;
  std::size_t scan_ciphertexts = 1000;
  std::size_t message_len = 64;
};

struct PrivacyReport {
  SchemeTag scheme = SchemeTag::original;
  std::size_t n = 0;
  std::set<std::size_t> serialized_lengths;  // over independent recipient sets
  std::vector<std::uint64_t> ordering_counts;  // indexed by permutation rank
  stats::ChiSquare ordering;
  std::size_t scanned = 0;
  std::size_t pk_occurrences = 0;

  bool lengths_identical() const { return serialized_lengths.size() == 1; }
};

/// (a) serialized length across independent recipient sets, (b) uniformity of
/// component order recovered by trial decryption, (c) absence of recipient
/// public keys in the serialized bytes.
inline PrivacyReport privacy_probe(const SystemParams& params, SchemeTag scheme, std::size_t n, RandomSource& rng,
                                   const PrivacyOptions& options = {}) {
  if (n < 2 || n > 8) throw InvalidConfiguration("privacy probe needs n in [2, 8]");
  PrivacyReport report;
  report.scheme = scheme;
  report.n = n;
  const auto broadcaster = improved::keygen_broadcaster(params, rng);
  const auto message = rng.bytes(options.message_len);

  for (std::size_t i = 0; i < options.length_sets; ++i) {
    auto kps = detail::fresh_recipients(params, n, rng);
    auto ct = detail::encrypt_any(params, scheme, detail::set_of(params, kps), message, broadcaster, rng);
    report.serialized_lengths.insert(serialize(ct).size());
  }

  const auto kps = detail::fresh_recipients(params, n, rng);
  const auto set = detail::set_of(params, kps);
  report.ordering_counts.assign(stats::factorial(n), 0);
  const auto trials = std::max(options.ordering_trials, options.scan_ciphertexts);
  for (std::size_t t = 0; t < trials; ++t) {
    auto ct = detail::encrypt_any(params, scheme, set, message, broadcaster, rng);
    if (t < options.scan_ciphertexts) {
      auto wire = serialize(ct);
      ++report.scanned;
      for (const auto& kp : kps)
        if (contains_subsequence(wire, kp.pk.view())) ++report.pk_occurrences;
    }
    if (t >= options.ordering_trials) continue;
    // owner[j] = index of the recipient whose key opens component j.
    std::vector<std::size_t> owner(n, n);
    std::vector<bool> taken(n, false);
    OpCounters scratch;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        if (pke_dec(params, kps[i].sk, ct.c1[j], RejectMode::strict, scratch)) {
          owner[j] = i;
          taken[i] = true;
          break;
        }
      }
      if (owner[j] == n) throw Error("privacy probe: component opened by no recipient");
    }
    ++report.ordering_counts[stats::permutation_rank(owner)];
  }
  report.ordering = stats::chi_square_uniform(report.ordering_counts);
  return report;
}

// ---- reports ----

inline std::string format_mean(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

inline constexpr const char* kCostCsvHeader = "scheme,n,role,mode,trial,pke_dec,ots_verify,sig_verify,sym_dec";

/// One row per trial, then a row whose trial column is "mean".
inline std::string to_csv(const CostReport& r) {
  std::ostringstream os;
  const auto& c = r.config;
  const std::string prefix = std::string(scheme_name(c.scheme)) + "," + std::to_string(c.n) + "," +
                             role_name(c.role) + "," + mode_name(c.mode) + ",";
  os << kCostCsvHeader << "\n";
  for (const auto& t : r.trials)
    os << prefix << t.trial << "," << t.counters.pke_dec << "," << t.counters.ots_verify << ","
       << t.counters.sig_verify << "," << t.counters.sym_dec << "\n";
  os << prefix << "mean," << format_mean(r.mean(&OpCounters::pke_dec).value()) << ","
     << format_mean(r.mean(&OpCounters::ots_verify).value()) << ","
     << format_mean(r.mean(&OpCounters::sig_verify).value()) << ","
     << format_mean(r.mean(&OpCounters::sym_dec).value()) << "\n";
  return os.str();
}

inline std::string to_text(const CostReport& r) {
  std::ostringstream os;
  const auto& c = r.config;
  os << "scheme: " << scheme_name(c.scheme) << "\n"
     << "n: " << c.n << "\n"
     << "role: " << role_name(c.role) << "\n"
     << "mode: " << mode_name(c.mode) << "\n"
     << "trials: " << r.trials.size() << "\n";
  auto line = [&](const char* name, std::uint64_t OpCounters::*f) {
    auto m = r.mean(f);
    os << "mean " << name << ": " << format_mean(m.value()) << " (" << m.sum << "/" << m.count << ")\n";
  };
  line("pke_dec", &OpCounters::pke_dec);
  line("ots_verify", &OpCounters::ots_verify);
  line("sig_verify", &OpCounters::sig_verify);
  line("sym_dec", &OpCounters::sym_dec);
  os << "header false matches: " << r.header_false_matches << "\n"
     << "wrong outcomes: " << r.wrong_outcomes << "\n";
  return os.str();
}

inline constexpr const char* kAttackCsvHeader =
    "attack,scheme,accepted,recovered_len,pke_dec,ots_verify,sig_verify,sym_dec";

inline std::string to_csv_row(const AttackOutcome& o) {
  std::ostringstream os;
  os << o.attack_name << "," << scheme_name(o.target_scheme) << "," << (o.accepted_by_recipient ? 1 : 0) << ","
     << (o.recovered_message ? std::to_string(o.recovered_message->size()) : std::string("-")) << ","
     << o.counters.pke_dec << "," << o.counters.ots_verify << "," << o.counters.sig_verify << ","
     << o.counters.sym_dec;
  return os.str();
}

inline std::string to_text(const AttackOutcome& o) {
  std::ostringstream os;
  os << o.attack_name << " against " << scheme_name(o.target_scheme) << ": "
     << (o.accepted_by_recipient ? "ACCEPTED" : "rejected");
  if (o.recovered_message) os << " (" << o.recovered_message->size() << " bytes recovered)";
  os << " [" << o.counters << "]";
  return os.str();
}

}  // namespace pbe::adversary
