// Walks through the forged-origin attack and the per-recipient cost of both
// schemes for a small recipient set.

#include <iostream>

#include "pbe/pbe.hpp"

int main() {
  using namespace pbe;
  auto params = pke_init(128);
  SeededRandom rng(2014);

  std::vector<RecipientKeyPair> members;
  std::vector<RecipientPublicKey> published;
  for (int i = 0; i < 5; ++i) {
    members.push_back(pke_gen(params, rng));
    published.push_back(members.back().pk);
  }
  RecipientSet audience(params, published);
  auto broadcaster = improved::keygen_broadcaster(params, rng);
  auto outsider = pke_gen(params, rng);

  // Anyone who knows the published keys can produce an original-scheme broadcast.
  auto payload = to_bytes("urgent: rotate your credentials at evil.example");
  {
    OpCounters c;
    auto forged = adversary::forge_origin(params, audience, payload, rng);
    auto got = original::decrypt(params, members[0].sk, forged, RejectMode::strict, c);
    std::cout << adversary::to_text(adversary::observe("forge-origin", SchemeTag::original, got, c)) << "\n";
  }
  {
    OpCounters c;
    auto forged = adversary::forge_origin_improved(params, audience, payload, rng);
    auto got = improved::decrypt(params, members[0].sk, broadcaster.pk, forged, RejectMode::strict, c);
    std::cout << adversary::to_text(adversary::observe("forge-origin", SchemeTag::improved, got, c)) << "\n";
  }

  // Cost for someone outside the audience when failures are not detectable.
  OpCounters scratch;
  auto honest_o = original::encrypt(params, audience, to_bytes("hello"), rng, scratch);
  auto honest_i = improved::encrypt(params, audience, to_bytes("hello"), broadcaster, rng, scratch);
  OpCounters co, ci;
  original::decrypt(params, outsider.sk, honest_o, RejectMode::permissive, co);
  improved::decrypt(params, outsider.sk, broadcaster.pk, honest_i, RejectMode::permissive, ci);
  std::cout << "outsider, original: " << co << "\n"
            << "outsider, improved: " << ci << "\n";
}
