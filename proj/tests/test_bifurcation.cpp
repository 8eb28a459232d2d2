#include <doctest.h>

#include "eqdeg/bifurcation.hpp"
#include "eqdeg/error.hpp"

using namespace eqdeg;

namespace {

std::unique_ptr<Problem> fixture() {
  return Problem::create(load_config(std::string(EQDEG_FIXTURE_DIR) + "/bifurcation_m3.json"));
}

std::unique_ptr<Problem> diagonal(int m, const std::vector<std::string>& d) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t r = 0; r < d.size(); ++r) {
    std::vector<std::string> row(d.size(), "0");
    row[r] = d[r];
    a.push_back(row);
  }
  return Problem::create(parse_config({{"m", m}, {"A", a}}));
}

BurnsideElement named(const Problem& p, const std::string& name, long c = 1) {
  return BurnsideElement::generator(p.lattice().find_required(name), c);
}

}  // namespace

TEST_CASE("critical values of the three-cell example") {
  auto p = fixture();
  auto r = bifurcation_report(*p);
  const std::vector<Rational> expect = {{-2}, {-17, 9}, {-14, 9}, {-1}, {-1, 2}, {-7, 18}, {-2, 9}, {-1, 18}};
  REQUIRE(r.points.size() == expect.size());
  for (std::size_t n = 0; n < expect.size(); ++n) {
    REQUIRE(r.points[n].at.exact.has_value());
    CHECK(*r.points[n].at.exact == expect[n]);
    CHECK(r.points[n].at.simple);
  }
  CHECK(r.points[0].omega == named(*p, "D_3xD_3"));
  auto w10 = named(*p, "D_3xD_1^z") - named(*p, "D_3xD_1");
  CHECK(r.points[1].omega == w10);
  CHECK(r.points[2].omega == -w10);
  for (const auto& pt : r.points) CHECK(pt.nonzero == !pt.omega.is_zero());
}

TEST_CASE("invariants telescope to the existence degree") {
  for (auto& p : {fixture(), diagonal(4, {"-3/2", "-1/3"}), diagonal(6, {"-5/7"})}) {
    auto r = bifurcation_report(*p, std::pair{-100.0, 0.0});
    BurnsideElement sum;
    for (const auto& pt : r.points) sum += pt.omega;
    CHECK(sum == existence_degree(*p).degree);
  }
}

TEST_CASE("local invariant uses every earlier critical point") {
  auto p = fixture();
  auto all = critical_points_below(matrix_spectrum(p->config(), p->gamma(), p->irreps().gamma()), 0.0, 1e-9);
  // window that cuts off the first three points still sees them in the prefix
  auto r = bifurcation_report(*p, std::pair{-1.2, 0.0});
  REQUIRE(r.points.size() == 5);
  std::vector<CriticalPoint> before(all.begin(), all.begin() + 3);
  CHECK(r.points[0].omega == local_invariant(all[3], before, *p));
  CHECK(r.points[0].omega != local_invariant(all[3], {}, *p));
}

TEST_CASE("window edge cases") {
  auto p = fixture();
  CHECK(bifurcation_report(*p, std::pair{0.05, 0.1}).points.empty());
  CHECK_THROWS_AS(bifurcation_report(*p, std::pair{0.0, -1.0}), Error);
  auto singular = diagonal(3, {"0", "-1/2"});
  try {
    bifurcation_report(*singular);
    FAIL("singular A accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
  }
}

TEST_CASE("even crossing multiplicity gives a zero invariant") {
  auto p = diagonal(3, {"-3/2", "-3/2"});
  auto r = bifurcation_report(*p);
  REQUIRE_FALSE(r.points.empty());
  for (const auto& pt : r.points) {
    CHECK(pt.omega.is_zero());
    CHECK_FALSE(pt.odd_shortcut_applies);
  }
  auto odd = bifurcation_report(*diagonal(3, {"-3/2"}));
  for (const auto& pt : odd.points)
    if (pt.odd_shortcut_applies) CHECK(pt.nonzero);
}

TEST_CASE("coincident critical values") {
  auto p = diagonal(3, {"-2", "-1"});  // j=3 on -2 meets j=0 on -1 at -1
  auto r = bifurcation_report(*p);
  int merged = 0;
  for (const auto& pt : r.points)
    if (!pt.at.simple) {
      ++merged;
      CHECK(pt.at.crossings.size() == 2);
      CHECK(pt.at.alpha == doctest::Approx(-1.0));
    }
  CHECK(merged == 1);
  try {
    bifurcation_report(*p, std::nullopt, true);
    FAIL("strict mode accepted a coincidence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbiguousCrossing);
  }
}
