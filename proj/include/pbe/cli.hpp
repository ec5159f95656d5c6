#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pbe/pbe.hpp"

// Command-line front end. `run` takes the arguments after the program name and
// explicit streams so it can be driven in-process.
namespace pbe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kSeedEnv = "PBE_SEED";

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class Rejected : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline Bytes read_input(const std::string& path, std::istream& in) {
  if (path == "-") return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

inline void write_output(const std::string& path, ByteView data, std::ostream& out) {
  if (path == "-") {
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw Error("write failed: " + path);
}

/// Secret material only ever goes to a named file.
inline void write_secret(const std::string& path, ByteView data, std::ostream& out) {
  if (path == "-") throw UsageError("refusing to write a secret key to standard output");
  write_output(path, data, out);
}

inline KeyFile load_key(const std::string& path, std::istream& in) {
  try {
    return parse_keyfile(read_input(path, in));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

inline SchemeTag parse_scheme(const std::string& s) {
  if (s == "original") return SchemeTag::original;
  if (s == "improved") return SchemeTag::improved;
  throw UsageError("unknown scheme: " + s);
}

inline RejectMode parse_mode(const std::string& s) {
  if (s == "strict") return RejectMode::strict;
  if (s == "permissive") return RejectMode::permissive;
  throw UsageError("unknown mode: " + s);
}

inline std::unique_ptr<RandomSource> make_rng(std::optional<std::uint64_t> seed, const char* env_seed) {
  if (!seed && env_seed != nullptr && *env_seed != '\0') {
    char* end = nullptr;
    auto v = std::strtoull(env_seed, &end, 10);
    if (end == env_seed || *end != '\0') throw UsageError(std::string("invalid ") + kSeedEnv + " value");
    seed = v;
  }
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

inline RecipientSet load_recipients(const std::vector<std::string>& files, const SystemParams& params,
                                    std::istream& in) {
  std::vector<RecipientPublicKey> pks;
  for (const auto& f : files) pks.push_back(recipient_public_from(load_key(f, in), params));
  return RecipientSet(params, std::move(pks));
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, Streams io, const char* env_seed = std::getenv(kSeedEnv)) {
  CLI::App app{"Private broadcast encryption: original and origin-authenticated schemes", "pbe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::optional<std::uint64_t> seed;
  unsigned level = 128;
  app.add_option("--seed", seed, "Deterministic randomness seed (overrides $PBE_SEED)");
  app.add_option("--level", level, "Security level: 128, 192 or 256")->check(CLI::IsMember({128u, 192u, 256u}));

  std::string pub_path, sec_path;
  auto* keygen = app.add_subcommand("keygen", "Generate a recipient key pair");
  keygen->add_option("--pub", pub_path, "Public key output file")->required();
  keygen->add_option("--sec", sec_path, "Secret key output file")->required();

  auto* bkeygen = app.add_subcommand("bcast-keygen", "Generate a broadcaster signing key pair");
  bkeygen->add_option("--pub", pub_path, "Public key output file")->required();
  bkeygen->add_option("--sec", sec_path, "Secret key output file")->required();

  std::string scheme_str = "original", mode_str = "strict", in_path = "-", out_path = "-", bcast_key, bcast_pub;
  std::vector<std::string> to;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt a message to a recipient set");
  encrypt->add_option("--scheme", scheme_str, "original | improved")->check(CLI::IsMember({"original", "improved"}));
  encrypt->add_option("--to", to, "Recipient public key files")->required();
  encrypt->add_option("--bcast-key", bcast_key, "Broadcaster secret key file (improved scheme)");
  encrypt->add_option("--in", in_path, "Message file, - for stdin");
  encrypt->add_option("--out", out_path, "Ciphertext file, - for stdout");

  std::string key_path;
  std::optional<std::string> expect_scheme;
  bool show_counters = false;
  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a broadcast with a recipient secret key");
  decrypt->add_option("--key", key_path, "Recipient secret key file")->required();
  decrypt->add_option("--bcast-pub", bcast_pub, "Trusted broadcaster public key file");
  decrypt->add_option("--scheme", expect_scheme, "Reject ciphertexts of any other scheme")
      ->check(CLI::IsMember({"original", "improved"}));
  decrypt->add_option("--mode", mode_str, "strict | permissive")->check(CLI::IsMember({"strict", "permissive"}));
  decrypt->add_option("--in", in_path, "Ciphertext file, - for stdin");
  decrypt->add_option("--out", out_path, "Message output file, - for stdout");
  decrypt->add_flag("--counters", show_counters, "Print operation counters to stderr");

  auto* attack = app.add_subcommand("attack", "Produce adversarial ciphertexts");
  attack->require_subcommand(1);
  auto* forge = attack->add_subcommand("forge-origin", "Encrypt an adversary message with no broadcaster secret");
  forge->add_option("--scheme", scheme_str, "Output format: original | improved")
      ->check(CLI::IsMember({"original", "improved"}));
  forge->add_option("--to", to, "Recipient public key files")->required();
  forge->add_option("--in", in_path, "Adversary message file, - for stdin");
  forge->add_option("--out", out_path, "Forged ciphertext file, - for stdout");
  std::string variant_str = "copy-sigma", msg_path;
  auto* splice = attack->add_subcommand("splice", "Reuse honest components under a new body");
  splice->add_option("--variant", variant_str, "copy-sigma | resign")->check(CLI::IsMember({"copy-sigma", "resign"}));
  splice->add_option("--in", in_path, "Honest ciphertext file, - for stdin");
  splice->add_option("--msg", msg_path, "Adversary message file")->required();
  splice->add_option("--out", out_path, "Spliced ciphertext file, - for stdout");

  std::size_t n = 8, trials = 1000;
  std::string role_str = "nonmember", format = "csv";
  mode_str = "strict";
  auto* bench = app.add_subcommand("bench", "Counter-trace cost experiment");
  bench->add_option("--scheme", scheme_str, "original | improved")->check(CLI::IsMember({"original", "improved"}));
  bench->add_option("--n", n, "Recipient set size")->check(CLI::Range(1, 32));
  bench->add_option("--role", role_str, "member | nonmember")->check(CLI::IsMember({"member", "nonmember"}));
  bench->add_option("--mode", mode_str, "strict | permissive")->check(CLI::IsMember({"strict", "permissive"}));
  bench->add_option("--trials", trials, "Number of trials (>= 100)");
  bench->add_option("--format", format, "csv | text")->check(CLI::IsMember({"csv", "text"}));

  auto* inspect = app.add_subcommand("inspect", "Print ciphertext structure");
  inspect->add_option("--in", in_path, "Ciphertext file, - for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto params = pke_init(level);
    auto rng = detail::make_rng(seed, env_seed);

    if (keygen->parsed()) {
      auto kp = original::keygen(params, *rng);
      detail::write_secret(sec_path, serialize(make_keyfile(params, kp)), io.out);
      detail::write_output(pub_path, serialize(make_keyfile(params, kp.pk)), io.out);
      return kExitOk;
    }

    if (bkeygen->parsed()) {
      auto kp = improved::keygen_broadcaster(params, *rng);
      detail::write_secret(sec_path, serialize(make_keyfile(params, kp)), io.out);
      detail::write_output(pub_path, serialize(make_keyfile(params, kp.pk)), io.out);
      return kExitOk;
    }

    if (encrypt->parsed()) {
      const auto scheme = detail::parse_scheme(scheme_str);
      auto recipients = detail::load_recipients(to, params, io.in);
      auto message = detail::read_input(in_path, io.in);
      OpCounters counters;
      BroadcastCiphertext ct;
      if (scheme == SchemeTag::original) {
        if (!bcast_key.empty()) throw UsageError("--bcast-key applies to the improved scheme only");
        ct = original::encrypt(params, recipients, message, *rng, counters);
      } else {
        if (bcast_key.empty()) throw UsageError("the improved scheme requires --bcast-key");
        auto bkp = broadcaster_secret_from(detail::load_key(bcast_key, io.in), params);
        ct = improved::encrypt(params, recipients, message, bkp, *rng, counters);
      }
      detail::write_output(out_path, serialize(ct), io.out);
      return kExitOk;
    }

    if (decrypt->parsed()) {
      const auto mode = detail::parse_mode(mode_str);
      auto kp = recipient_secret_from(detail::load_key(key_path, io.in), params);
      std::optional<BroadcasterPublicKey> trusted;
      if (!bcast_pub.empty()) trusted = broadcaster_public_from(detail::load_key(bcast_pub, io.in), params);
      auto raw = detail::read_input(in_path, io.in);
      BroadcastCiphertext ct;
      try {
        ct = parse_ciphertext(raw);
      } catch (const ParseError& e) {
        throw Rejected(std::string("malformed ciphertext: ") + e.what());
      }
      if (expect_scheme && ct.scheme != detail::parse_scheme(*expect_scheme))
        throw Rejected(std::string("expected a ") + *expect_scheme + " ciphertext, got " + scheme_name(ct.scheme));
      if (ct.scheme == SchemeTag::improved && !trusted)
        throw UsageError("improved-scheme ciphertext needs --bcast-pub");
      if (ct.scheme == SchemeTag::original && trusted)
        throw Rejected("ciphertext carries no broadcaster signature to check against --bcast-pub");

      OpCounters counters;
      auto m = ct.scheme == SchemeTag::original ? original::decrypt(params, kp.sk, ct, mode, counters)
                                                : improved::decrypt(params, kp.sk, *trusted, ct, mode, counters);
      if (show_counters) io.err << counters << "\n";
      if (!m) throw Rejected("decryption failed");
      detail::write_output(out_path, *m, io.out);
      return kExitOk;
    }

    if (forge->parsed()) {
      const auto scheme = detail::parse_scheme(scheme_str);
      auto recipients = detail::load_recipients(to, params, io.in);
      auto message = detail::read_input(in_path, io.in);
      auto ct = scheme == SchemeTag::original
                    ? adversary::forge_origin(params, recipients, message, *rng)
                    : adversary::forge_origin_improved(params, recipients, message, *rng);
      detail::write_output(out_path, serialize(ct), io.out);
      return kExitOk;
    }

    if (splice->parsed()) {
      auto honest = parse_ciphertext(detail::read_input(in_path, io.in));
      auto message = detail::read_input(msg_path, io.in);
      auto variant =
          variant_str == "resign" ? adversary::SpliceVariant::resign : adversary::SpliceVariant::copy_sigma;
      auto ct = adversary::splice_component(params, honest, message, variant, *rng);
      detail::write_output(out_path, serialize(ct), io.out);
      return kExitOk;
    }

    if (bench->parsed()) {
      adversary::CostConfig config;
      config.scheme = detail::parse_scheme(scheme_str);
      config.n = n;
      config.role = role_str == "member" ? adversary::Role::member : adversary::Role::non_member;
      config.mode = detail::parse_mode(mode_str);
      config.trials = trials;
      auto report = adversary::run_cost_experiment(params, config, *rng);
      io.out << (format == "csv" ? adversary::to_csv(report) : adversary::to_text(report));
      return kExitOk;
    }

    if (inspect->parsed()) {
      auto raw = detail::read_input(in_path, io.in);
      auto ct = parse_ciphertext(raw);
      io.out << "magic: PBE1\n"
             << "scheme: " << scheme_name(ct.scheme) << "\n"
             << "total bytes: " << raw.size() << "\n"
             << "sigma bytes: " << ct.sigma.size() << "\n"
             << "components: " << ct.c1.size() << "\n"
             << "component bytes: " << ct.c1.front().size() << "\n"
             << "c2 bytes: " << ct.c2.size() << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const adversary::InvalidConfiguration& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Rejected& e) {
    io.err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pbe::cli
