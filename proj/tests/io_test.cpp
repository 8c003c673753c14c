#include "twistcert/io.hpp"
#include "twistcert/scan.hpp"

#include <gtest/gtest.h>

namespace twistcert {
namespace {

TEST(Json, ThresholdRoundTrip) {
  const ThresholdReport t = threshold(normalize(-3, -6));
  const json j = t;
  EXPECT_EQ(j.at("schubert"), schubert_form(t.knot).name());
  const ThresholdReport back = json::parse(j.dump()).get<ThresholdReport>();
  EXPECT_EQ(back.knot, t.knot);
  EXPECT_EQ(back.knot.mirrored, t.knot.mirrored);
  EXPECT_EQ(back.tag, t.tag);
  EXPECT_EQ(back.rule, t.rule);
  EXPECT_EQ(back.threshold, t.threshold);
  EXPECT_EQ(back.arccos_threshold, t.arccos_threshold);
  EXPECT_EQ(back.r_min, t.r_min);
  EXPECT_EQ(back.notes, t.notes);
}

TEST(Json, KnownNonOrderableUsesNulls) {
  const json j = threshold(normalize(4, -2));
  EXPECT_TRUE(j.at("threshold").is_null());
  EXPECT_TRUE(j.at("r_min").is_null());
  EXPECT_TRUE(j.at("known_non_orderable").get<bool>());
}

TEST(Json, CertificateRoundTrip) {
  const Certificate c = certify(normalize(4, 2), 9);
  const Certificate back = json::parse(json(c).dump()).get<Certificate>();
  EXPECT_EQ(back.verdict, c.verdict);
  EXPECT_EQ(back.y, c.y);
  EXPECT_EQ(back.y_decimal, c.y_decimal);
  EXPECT_EQ(back.phi_residual, c.phi_residual);
  EXPECT_EQ(back.su11_residual, c.su11_residual);
  EXPECT_EQ(back.signature_pos, 1);
  EXPECT_EQ(back.above_threshold, c.above_threshold);
  EXPECT_EQ(back.max_residual(), c.max_residual());

  const Certificate none = certify(normalize(4, 2), 3);
  const json jn = none;
  EXPECT_TRUE(jn.at("y").is_null());
  EXPECT_EQ(jn.at("verdict"), "no_certificate");
}

TEST(Json, PolynomialTermsRoundTrip) {
  const IntPolyXY phi = riley_poly(DoubleTwistKnot::raw(5, 4)).phi_poly;
  const json terms = poly_terms_json(phi);
  EXPECT_TRUE(terms.at(0).at(2).is_string());
  EXPECT_EQ(poly_from_terms_json(json::parse(terms.dump())), phi);
}

TEST(Json, OutputRecordEnvelope) {
  const json rec = output_record("threshold --k 4 --l 2", json{{"a", 1}});
  EXPECT_EQ(rec.at("schema_version"), "1");
  EXPECT_EQ(rec.at("command"), "threshold --k 4 --l 2");
  EXPECT_EQ(rec.at("payload").at("a"), 1);
}

TEST(Csv, RowFormat) {
  ScanRow row;
  row.k = 4;
  row.l = 2;
  row.p = 7;
  row.m_schubert = 2;
  row.r = 9;
  row.threshold = 0.1;
  row.r_min = 9;
  row.verdict = Verdict::certified;
  row.y = 2.5;
  row.max_residual = 0;
  row.precision_bits = 128;
  EXPECT_EQ(to_csv(row), "4,2,7,2,9,0.10000000000000001,9,certified,2.5,0,128,");
  row.threshold.reset();
  row.r_min.reset();
  row.y.reset();
  row.verdict = Verdict::no_certificate;
  row.note = "known_non_orderable";
  EXPECT_EQ(to_csv(row), "4,2,7,2,9,,,no_certificate,,0,128,known_non_orderable");
}

TEST(Csv, FormatDoubleRoundTrips) {
  for (double v : {0.1, 8.6936316165851357562, 1e-300, -3.0}) EXPECT_EQ(std::stod(format_double(v)), v);
}

}  // namespace
}  // namespace twistcert
