#pragma once

#include <cstdint>
#include <ostream>

namespace pbe {

/// Tally of primitive invocations for one run. Each field is bumped by exactly
/// one per call of the corresponding primitive. `header_matches` counts
/// improved-scheme components whose decrypted header equalled the trusted key.
struct OpCounters {
  std::uint64_t pke_enc = 0;
  std::uint64_t pke_dec = 0;
  std::uint64_t ots_gen = 0;
  std::uint64_t ots_sign = 0;
  std::uint64_t ots_verify = 0;
  std::uint64_t sig_sign = 0;
  std::uint64_t sig_verify = 0;
  std::uint64_t sym_enc = 0;
  std::uint64_t sym_dec = 0;
  std::uint64_t header_matches = 0;

  void reset() { *this = OpCounters{}; }

  OpCounters& operator+=(const OpCounters& o) {
    pke_enc += o.pke_enc;
    pke_dec += o.pke_dec;
    ots_gen += o.ots_gen;
    ots_sign += o.ots_sign;
    ots_verify += o.ots_verify;
    sig_sign += o.sig_sign;
    sig_verify += o.sig_verify;
    sym_enc += o.sym_enc;
    sym_dec += o.sym_dec;
    header_matches += o.header_matches;
    return *this;
  }

  bool operator==(const OpCounters&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const OpCounters& c) {
  return os << "pke_enc=" << c.pke_enc << " pke_dec=" << c.pke_dec << " ots_gen=" << c.ots_gen
            << " ots_sign=" << c.ots_sign << " ots_verify=" << c.ots_verify
            << " sig_sign=" << c.sig_sign << " sig_verify=" << c.sig_verify
            << " sym_enc=" << c.sym_enc << " sym_dec=" << c.sym_dec
            << " header_matches=" << c.header_matches;
}

}  // namespace pbe
