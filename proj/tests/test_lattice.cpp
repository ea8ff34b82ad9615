#include <doctest.h>

#include <random>

#include "error.hpp"
#include "lattice.hpp"
#include "lattice_json.hpp"

using namespace nhls;

namespace {

// Written out by hand: 3 lead sites, then 4 SSH sites with gain first.
Eigen::MatrixXcd small_junction_by_hand(double J, double d, double g) {
  const cd i(0, 1);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(7, 7);
  h(0, 1) = h(1, 0) = J;
  h(1, 2) = h(2, 1) = J;
  h(2, 3) = h(3, 2) = J;
  h(3, 4) = h(4, 3) = 1 + d;
  h(4, 5) = h(5, 4) = J;
  h(5, 6) = h(6, 5) = 1 + d;
  h(3, 3) = i * g;
  h(4, 4) = -i * g;
  h(5, 5) = i * g;
  h(6, 6) = -i * g;
  return h;
}

}  // namespace

TEST_CASE("junction matrix matches hand-written entries") {
  const ModelParams p{0.9, 0.5, 0.3};
  const auto h = assemble(junction_spec(3, 4), p);
  REQUIRE(h.dim() == 7);
  CHECK((h.dense() - small_junction_by_hand(0.9, 0.5, 0.3)).norm() == 0.0);
  CHECK(h.spec().label(3) == 0);
  CHECK(h.spec().first_label() == -3);
  CHECK(h.spec().last_label() == 3);
  CHECK(h(3, 3) == cd(0, 0.3));
  CHECK(h(0, 6) == cd(0, 0));
}

TEST_CASE("ssh segment bonds alternate and gain side flips") {
  const ModelParams p{1.0, 0.5, 0.5};
  const auto a = build_nh_ssh_segment(6, p, true);
  const auto b = build_nh_ssh_segment(6, p, false);
  for (std::size_t n = 0; n < 5; ++n) CHECK(a.bonds()[n] == (n % 2 == 0 ? 1.5 : 1.0));
  for (std::size_t n = 0; n < 6; ++n) {
    CHECK(a(n, n).imag() == (n % 2 == 0 ? 0.5 : -0.5));
    CHECK(b(n, n).imag() == -a(n, n).imag());
  }
  CHECK_THROWS_AS(build_nh_ssh_segment(5, p, true), Error);
  CHECK_THROWS_AS(build_uniform_chain(1, p), Error);
}

TEST_CASE("gamma_sign reverses the onsite terms of one segment") {
  LatticeSpec s;
  s.segments = {SegmentDescriptor::lead(2), SegmentDescriptor::ssh(4, true, -1)};
  const auto h = assemble(s, {1.0, 0.5, 0.5});
  CHECK(h(2, 2) == cd(0, -0.5));
  CHECK(h(3, 3) == cd(0, 0.5));
}

TEST_CASE("ring closes with J and rejects odd SSH rings") {
  const ModelParams p{1.0, 0.5, 0.5};
  const auto r = assemble(ssh_ring_spec(4), p);
  CHECK(r.is_ring());
  CHECK(r(0, 7) == cd(1.0, 0));
  CHECK(r(7, 0) == cd(1.0, 0));
  CHECK(r(6, 7) == cd(1.5, 0));

  LatticeSpec odd;
  odd.segments = {SegmentDescriptor::lead(3), SegmentDescriptor::ssh(4)};
  odd.boundary = Boundary::Ring;
  CHECK_THROWS_AS(odd.validate(), Error);
  odd.segments[0].length = 4;
  CHECK_NOTHROW(odd.validate());
}

TEST_CASE("apply agrees with the dense product") {
  std::mt19937 rng(7);
  std::normal_distribution<double> n01;
  for (Boundary b : {Boundary::Open, Boundary::Ring}) {
    LatticeSpec s;
    s.segments = {SegmentDescriptor::lead(5), SegmentDescriptor::ssh(8), SegmentDescriptor::lead(3)};
    s.boundary = b;
    const auto h = assemble(s, {1.2, 0.3, 0.4});
    Eigen::VectorXcd x(16);
    for (auto& v : x) v = cd(n01(rng), n01(rng));
    CHECK((h.apply(x) - h.dense() * x).norm() < 1e-13);
  }
}

TEST_CASE("hermiticity follows gamma") {
  CHECK(assemble(junction_spec(4, 4), {1.0, 0.5, 0.0}).is_hermitian());
  CHECK_FALSE(assemble(junction_spec(4, 4), {1.0, 0.5, 0.1}).is_hermitian());
}

TEST_CASE("label and index are inverse and out-of-range labels throw") {
  const auto s = sandwich_spec(10, 6);
  CHECK(s.site_count() == 26);
  CHECK(s.origin_offset == 13);
  for (std::size_t i = 0; i < s.site_count(); ++i) CHECK(s.index(s.label(i)) == i);
  CHECK_THROWS_AS(s.index(13), Error);
  CHECK(s.contains(12));
  CHECK(s.segment_range(1) == std::pair<long, long>{-3, 2});
}

TEST_CASE("stack spec places spacers between segments") {
  const auto s = stack_spec(20, 3, 6, 4);
  REQUIRE(s.segments.size() == 7);
  CHECK(s.segments[2].kind == SegmentKind::UniformLead);
  CHECK(s.segments[2].length == 4);
  CHECK(s.site_count() == 20 + 3 * 6 + 2 * 4 + 20);
  CHECK(s.origin_offset == 20 + 13);
}

TEST_CASE("model parameter validation and EP") {
  CHECK_THROWS_AS((ModelParams{0.0, 0.5, 0.5}.validate()), Error);
  CHECK_THROWS_AS((ModelParams{1.0, -1.0, 0.5}.validate()), Error);
  CHECK(ep_gamma({1.0, 0.5, 0}, 1) == 0.5);
  CHECK(ep_gamma({1.0, 0.5, 0}, -1) == -0.5);
  CHECK((ModelParams{1.0, 0.5, 0.5}.is_at_ep()));
  CHECK_FALSE((ModelParams{1.0, 0.5, 0.4}.is_at_ep()));
}

TEST_CASE("lattice document round-trips") {
  LatticeDocument d{{1.0, 0.5, -0.5}, stack_spec(30, 2, 8, 6, false)};
  d.spec.segments[1].gamma_sign = -1;
  const auto back = parse_lattice_document(to_json(d).dump());
  CHECK(back.spec == d.spec);
  CHECK(back.params.gamma == -0.5);
}

TEST_CASE("lattice document diagnostics name the field") {
  const auto j = nlohmann::json::parse(R"({
    "params": {"J": 1, "delta": 0.5, "gamma": 0.5, "beta": 2},
    "segments": [{"kind": "lead", "length": 100}, {"kind": "ssh", "length": 151}, {"kind": "bogus", "length": 3}],
    "colour": "red"
  })");
  const auto diag = validate_lattice_document(j);
  auto has = [&](const std::string& s) {
    for (const auto& d : diag)
      if (d == s) return true;
    return false;
  };
  CHECK(has("segments[1].length: NhSshSegment length must be even (got 151)"));
  CHECK(has("params.beta: unknown field"));
  CHECK(has("colour: unknown field"));
  CHECK(has("segments[2].kind: expected \"UniformLead\" or \"NhSshSegment\""));
  CHECK_THROWS_AS(parse_lattice_document(j), Error);
  CHECK_THROWS_AS(parse_lattice_document(std::string("{not json")), Error);

  const auto ring = nlohmann::json::parse(
      R"({"params": {"J": 1, "delta": 0.5, "gamma": 0.5}, "boundary": "ring",
          "segments": [{"kind": "UniformLead", "length": 3}, {"kind": "NhSshSegment", "length": 4}]})");
  const auto rd = validate_lattice_document(ring);
  REQUIRE(rd.size() == 1);
  CHECK(rd[0].find("even total site count") != std::string::npos);
}
