#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace pbe;
using namespace pbe::adversary;
using pbe::testing::make_recipients;
using pbe::testing::make_set;

namespace {

struct Harness : ::testing::Test {
  SystemParams params = pke_init(128);
  SeededRandom rng{404};
  BroadcasterKeyPair broadcaster = improved::keygen_broadcaster(params, rng);
  std::vector<RecipientKeyPair> kps = make_recipients(params, 4, rng);
  RecipientSet set = make_set(params, kps);
  Bytes evil = to_bytes("adversary payload");
};

}  // namespace

TEST_F(Harness, ForgedOriginIsAcceptedByOriginalScheme) {
  auto forged = forge_origin(params, set, evil, rng);
  EXPECT_EQ(parse_ciphertext(serialize(forged)), forged);
  for (const auto& kp : kps) {
    for (auto mode : {RejectMode::strict, RejectMode::permissive}) {
      OpCounters c;
      auto o = observe("forge-origin", SchemeTag::original, original::decrypt(params, kp.sk, forged, mode, c), c);
      EXPECT_TRUE(o.accepted_by_recipient);
      EXPECT_EQ(o.recovered_message, evil);
    }
  }
}

TEST_F(Harness, ForgedOriginIsRejectedByImprovedScheme) {
  auto forged = forge_origin_improved(params, set, evil, rng);
  for (const auto& kp : kps) {
    for (auto mode : {RejectMode::strict, RejectMode::permissive}) {
      OpCounters c;
      auto o = observe("forge-origin", SchemeTag::improved,
                       improved::decrypt(params, kp.sk, broadcaster.pk, forged, mode, c), c);
      EXPECT_FALSE(o.accepted_by_recipient);
      EXPECT_FALSE(o.recovered_message.has_value());
      EXPECT_EQ(o.counters.pke_dec, 0u);
    }
  }
}

TEST_F(Harness, SpliceVariantsFailAgainstBothSchemes) {
  OpCounters enc;
  auto honest_o = original::encrypt(params, set, to_bytes("honest"), rng, enc);
  auto honest_i = improved::encrypt(params, set, to_bytes("honest"), broadcaster, rng, enc);
  for (auto v : {SpliceVariant::copy_sigma, SpliceVariant::resign}) {
    auto so = splice_component(params, honest_o, evil, v, rng);
    auto si = splice_component(params, honest_i, evil, v, rng);
    EXPECT_EQ(so.c1.size(), honest_o.c1.size());
    for (const auto& kp : kps) {
      for (auto mode : {RejectMode::strict, RejectMode::permissive}) {
        OpCounters co, ci;
        EXPECT_FALSE(original::decrypt(params, kp.sk, so, mode, co)) << variant_name(v);
        EXPECT_FALSE(improved::decrypt(params, kp.sk, broadcaster.pk, si, mode, ci)) << variant_name(v);
        EXPECT_EQ(ci.pke_dec, 0u);
        // The honest vk is recovered and then rejects the spliced sigma.
        EXPECT_GE(co.ots_verify, 1u);
      }
    }
  }
}

TEST_F(Harness, OutcomeInvariant) {
  OpCounters c;
  auto rejected = observe("x", SchemeTag::improved, std::nullopt, c);
  EXPECT_FALSE(rejected.accepted_by_recipient);
  auto accepted = observe("x", SchemeTag::original, Bytes{1}, c);
  EXPECT_TRUE(accepted.accepted_by_recipient);
  EXPECT_TRUE(accepted.recovered_message.has_value());
  EXPECT_EQ(to_csv_row(accepted), "x,original,1,1,0,0,0,0");
  EXPECT_NE(to_text(rejected).find("rejected"), std::string::npos);
}

TEST_F(Harness, OriginalNonMemberCostMatchesSetSize) {
  auto r = run_cost_experiment(params, {SchemeTag::original, 8, Role::non_member, RejectMode::permissive, 100}, rng);
  ASSERT_EQ(r.trials.size(), 100u);
  for (const auto& t : r.trials) {
    EXPECT_EQ(t.counters.pke_dec, 8u);
    EXPECT_EQ(t.counters.ots_verify, 8u);
  }
  EXPECT_EQ(r.mean(&OpCounters::pke_dec).value(), 8.0);
  EXPECT_EQ(r.wrong_outcomes, 0u);
}

TEST_F(Harness, ImprovedNonMemberVerifiesOnce) {
  auto r = run_cost_experiment(params, {SchemeTag::improved, 8, Role::non_member, RejectMode::permissive, 100}, rng);
  EXPECT_EQ(r.mean(&OpCounters::sig_verify).value(), 1.0);
  EXPECT_EQ(r.mean(&OpCounters::ots_verify).value(), 0.0);
  EXPECT_EQ(r.header_false_matches, 0u);
  EXPECT_EQ(r.wrong_outcomes, 0u);
}

TEST_F(Harness, MemberCostTracksPosition) {
  auto r = run_cost_experiment(params, {SchemeTag::original, 4, Role::member, RejectMode::permissive, 400}, rng);
  EXPECT_EQ(r.wrong_outcomes, 0u);
  for (const auto& t : r.trials) {
    EXPECT_EQ(t.counters.pke_dec, t.counters.ots_verify);
    EXPECT_GE(t.counters.pke_dec, 1u);
    EXPECT_LE(t.counters.pke_dec, 4u);
  }
  // Uniform position over {1..4} has mean 2.5 and sd ~1.118; 400 trials -> se ~0.056.
  EXPECT_NEAR(r.mean(&OpCounters::pke_dec).value(), 2.5, 0.3);
}

TEST_F(Harness, ExperimentsAreDeterministicUnderSeed) {
  CostConfig cfg{SchemeTag::improved, 3, Role::member, RejectMode::strict, 100};
  SeededRandom a(5), b(5);
  EXPECT_EQ(to_csv(run_cost_experiment(params, cfg, a)), to_csv(run_cost_experiment(params, cfg, b)));
}

TEST_F(Harness, InvalidConfigurationsAreRejected) {
  EXPECT_THROW(run_cost_experiment(params, {SchemeTag::original, 0, Role::member, RejectMode::strict, 100}, rng),
               InvalidConfiguration);
  EXPECT_THROW(run_cost_experiment(params, {SchemeTag::original, 33, Role::member, RejectMode::strict, 100}, rng),
               InvalidConfiguration);
  EXPECT_THROW(run_cost_experiment(params, {SchemeTag::original, 8, Role::member, RejectMode::strict, 99}, rng),
               InvalidConfiguration);
  EXPECT_THROW(privacy_probe(params, SchemeTag::original, 1, rng), InvalidConfiguration);
  EXPECT_THROW(privacy_probe(params, SchemeTag::original, 9, rng), InvalidConfiguration);
}

TEST_F(Harness, CsvReportLayout) {
  auto r = run_cost_experiment(params, {SchemeTag::original, 2, Role::non_member, RejectMode::permissive, 100}, rng);
  auto csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCostCsvHeader);
  EXPECT_NE(csv.find("original,2,nonmember,permissive,0,2,2,0,0\n"), std::string::npos);
  EXPECT_NE(csv.find("original,2,nonmember,permissive,mean,2.0,2.0,0.0,0.0\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 102);
  EXPECT_NE(to_text(r).find("mean pke_dec: 2.0 (200/100)"), std::string::npos);
}

TEST(FormatMean, TrimsTrailingZeros) {
  EXPECT_EQ(format_mean(8.0), "8.0");
  EXPECT_EQ(format_mean(4.5), "4.5");
  EXPECT_EQ(format_mean(4.49912), "4.4991");
}

TEST_F(Harness, PrivacyProbeOnSmallBudget) {
  PrivacyOptions opts{10, 600, 50, 32};
  for (auto scheme : {SchemeTag::original, SchemeTag::improved}) {
    auto r = privacy_probe(params, scheme, 3, rng, opts);
    EXPECT_TRUE(r.lengths_identical());
    EXPECT_EQ(r.ordering_counts.size(), 6u);
    std::uint64_t total = 0;
    for (auto c : r.ordering_counts) total += c;
    EXPECT_EQ(total, 600u);
    EXPECT_GT(r.ordering.p_value, 0.001);
    EXPECT_EQ(r.scanned, 50u);
    EXPECT_EQ(r.pk_occurrences, 0u);
  }
}
