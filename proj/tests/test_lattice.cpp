#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "orthotope/lattice.hpp"

using namespace orthotope;

namespace {

HalfPoint H(std::initializer_list<Coord> doubled) { return HalfPoint(doubled); }

std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

const std::vector<fixture::SuiteCase>& suite() {
  static const auto s = fixture::random_suite(60, 99);
  return s;
}

}  // namespace

TEST_CASE("classify points of the unit cube") {
  const auto c = fixture::cube(3);
  const PointClass corner = classify_point(c, H({0, 0, 0}));
  CHECK(corner.cone == OrthantSet::from_mask(3, 1));
  CHECK(corner.degree == 0);
  CHECK(corner.is_vertex());
  CHECK(corner.floral == Recognition(parse_expr("1&2&3")));

  const PointClass inside = classify_point(c, H({1, 1, 1}));
  CHECK(inside.cone.is_full());
  CHECK(inside.degree == 3);
  CHECK_FALSE(inside.is_vertex());

  const PointClass on_face = classify_point(c, H({1, 1, 0}));
  CHECK(on_face.degree == 2);
  CHECK(on_face.essential_axes == std::vector<Axis>{3});

  const PointClass far = classify_point(c, H({9, 9, 9}));
  CHECK(far.cone.empty());
  CHECK(far.degree == -1);
}

TEST_CASE("classify the rigid degenerate point") {
  const PointClass q = classify_point(fixture::rigid_q(), H({2, 2, 2}));
  CHECK(std::holds_alternative<Degenerate>(q.floral));
  CHECK(q.degree == 0);
}

TEST_CASE("vertices") {
  CHECK(vertices(fixture::cube(3)).size() == 8);
  for (const PointClass& v : vertices(fixture::cube(3))) CHECK(std::holds_alternative<SignedSpd>(v.floral));
  CHECK(vertices(fixture::torus()).size() == 32);
  const auto two = IntegralOrthotope::from_boxes(3, {{{0, 0, 0}, {1, 1, 1}}, {{3, 3, 3}, {4, 4, 4}}});
  CHECK(vertices(two).size() == 16);
  const auto v = vertices(fixture::l_shape());
  CHECK(std::is_sorted(v.begin(), v.end(), [](const PointClass& a, const PointClass& b) { return a.point < b.point; }));
  CHECK(vertices(IntegralOrthotope(2)).empty());
}

TEST_CASE("genericity check") {
  CHECK(check_generic(fixture::cube(3)).generic());
  CHECK(check_generic(fixture::torus()).generic());
  const GenericityCheck q = check_generic(fixture::rigid_q());
  REQUIRE_FALSE(q.generic());
  CHECK(*q.witness == H({2, 2, 2}));
  // two squares touching at a corner
  const auto bow = IntegralOrthotope::from_cells(2, {{0, 0}, {1, 1}});
  REQUIRE_FALSE(check_generic(bow).generic());
  CHECK(*check_generic(bow).witness == H({2, 2}));
  try {
    vertex_census(bow);
    FAIL("expected NotGenericError");
  } catch (const NotGenericError& e) {
    CHECK(e.witness() == H({2, 2}));
  }
  CHECK(check_generic(IntegralOrthotope(3)).generic());
}

TEST_CASE("vertex census") {
  const VertexCensus t = vertex_census(fixture::torus());
  CHECK(t.by_mu == std::map<std::uint64_t, std::uint64_t>{{1, 15}, {3, 11}, {5, 5}, {7, 1}});
  CHECK(t.total() == 32);
  std::uint64_t classes = 0;
  for (const auto& [key, n] : t.by_class) classes += n;
  CHECK(classes == 32);
  CHECK(t.by_class.at(canonical_key(parse_expr("1&2&3").shape())) == 15);
  CHECK(t.by_class.at(canonical_key(parse_expr("(1|2)&3").shape())) == 11);

  CHECK(vertex_census(fixture::cube(2)).by_mu == std::map<std::uint64_t, std::uint64_t>{{1, 4}});
  CHECK(vertex_census(fixture::l_shape()).by_mu == std::map<std::uint64_t, std::uint64_t>{{1, 5}, {3, 1}});
  CHECK(vertex_census(IntegralOrthotope(2)).total() == 0);
  CHECK_THROWS_AS(vertex_census(fixture::rigid_q()), NotGenericError);
}

TEST_CASE("volume by three methods") {
  for (auto m : {VolumeMethod::MuSum, VolumeMethod::Determinantal, VolumeMethod::VoxelCount}) {
    CHECK(volume(fixture::cube(3), m) == 1);
    CHECK(volume(fixture::torus(), m) == 28);
    CHECK(volume(IntegralOrthotope(3), m) == 0);
    CHECK(volume(fixture::l_shape().rescaled(4), m) == 3);
    CHECK(volume(IntegralOrthotope::from_boxes(2, {{{0, 0}, {2, 1}}}), m) == 2);
  }
  // a box away from the origin at a fractional scale
  const auto off = IntegralOrthotope::from_boxes(3, {{{1, 2, 3}, {4, 4, 4}}}, 2);
  CHECK(volume(off, VolumeMethod::Determinantal) == Rational(3 * 2 * 1, 8));
  CHECK(volume(off, VolumeMethod::MuSum) == Rational(6, 8));
  CHECK_THROWS_AS(volume(fixture::rigid_q(), VolumeMethod::MuSum), NotGenericError);
  CHECK_THROWS_AS(volume(fixture::rigid_q(), VolumeMethod::Determinantal), NotGenericError);
  CHECK(volume(fixture::rigid_q(), VolumeMethod::VoxelCount) == 6);
}

TEST_CASE("Euler characteristic") {
  CHECK(sigma_sum(fixture::cube(3)) == 8);
  for (auto m : {EulerMethod::SigmaSum, EulerMethod::CubicalComplex}) {
    CHECK(euler(fixture::cube(3), m) == 1);
    CHECK(euler(fixture::torus(), m) == 0);
    CHECK(euler(IntegralOrthotope::from_boxes(3, {{{0, 0, 0}, {1, 1, 1}}, {{3, 3, 3}, {4, 4, 4}}}), m) == 2);
    CHECK(euler(IntegralOrthotope(2), m) == 0);
  }
  // an annulus
  const auto ring = IntegralOrthotope::from_boxes(2, {{{0, 0}, {3, 1}}, {{0, 2}, {3, 3}}, {{0, 0}, {1, 3}}, {{2, 0}, {3, 3}}});
  CHECK(euler(ring, EulerMethod::SigmaSum) == 0);
  CHECK(euler(fixture::rigid_q(), EulerMethod::CubicalComplex) == 1);
  CHECK_THROWS_AS(euler(fixture::rigid_q(), EulerMethod::SigmaSum), NotGenericError);
}

TEST_CASE("skeleton") {
  const SkeletonGraph sq = skeleton(fixture::cube(2));
  CHECK(sq.nodes.size() == 4);
  CHECK(sq.arcs.size() == 4);
  CHECK(sq.bipartite());
  for (std::size_t deg : sq.degrees()) CHECK(deg == 2);

  const SkeletonGraph c = skeleton(fixture::cube(3));
  CHECK(c.nodes.size() == 8);
  CHECK(c.arcs.size() == 12);
  CHECK(c.bipartite());

  const SkeletonGraph t = skeleton(fixture::torus());
  CHECK(t.nodes.size() == 32);
  CHECK(t.arcs.size() == 48);
  CHECK(t.bipartite());
  for (std::size_t deg : t.degrees()) CHECK(deg == 3);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const SkeletonArc& a : t.arcs) arcs.emplace_back(a.from, a.to);
  CHECK(oracle::two_colourable(t.nodes.size(), arcs));
  CHECK_THROWS_AS(skeleton(fixture::rigid_q()), NotGenericError);
}

TEST_CASE("face poset") {
  CHECK(face_poset(fixture::cube(3)).f_vector() == std::vector<std::size_t>{8, 12, 6, 1});
  CHECK(face_poset(fixture::l_shape()).f_vector() == std::vector<std::size_t>{6, 6, 1});
  const FacePoset t = face_poset(fixture::torus());
  const auto f = t.f_vector();
  CHECK(static_cast<std::int64_t>(f[0]) - f[1] + f[2] - f[3] == 0);
  for (const Face& face : t.faces) {
    CHECK(face.closure.dim() == face.dim);
    CHECK(check_generic(face.closure).generic());
  }
  CHECK_THROWS_AS(face_poset(fixture::rigid_q()), NotGenericError);
}

TEST_CASE("cross-sections") {
  CHECK(cross_section(fixture::cube(3), {{1, 1}}) == fixture::cube(2));
  const auto top = cross_section(fixture::torus(), {{3, 5}});
  CHECK(oracle::cells_of(top) == oracle::CellSet{{1, 0}, {2, 0}, {3, 0}, {4, 0}});
  CHECK(cross_section(fixture::torus(), {{3, 1}}).unit_cell_count() == 14);
  // closed slice on an integer plane takes both layers
  CHECK(cross_section(fixture::torus(), {{3, 4}}) ==
        IntegralOrthotope::from_boxes(2, [] {
          std::vector<IntBox> b;
          for (const Point& v : fixture::torus_corners())
            if (v[2] == 1 || v[2] == 2) b.push_back({{v[0], v[1]}, {v[0] + 1, v[1] + 1}});
          return b;
        }()));
  CHECK(cross_section(fixture::torus(), {{3, 99}}).empty());
  CHECK(cross_section(fixture::torus(), {{1, 1}, {3, 1}}).dim() == 1);
  CHECK(cross_section(fixture::torus(), {{1, 1}, {2, 1}, {3, 1}}) == fixture::cube(0));
}

TEST_CASE("set operations") {
  const auto a = fixture::cube(3), b = fixture::cube(3, 5);
  const SetOpResult u = set_ops(a, b, BoolOp::Union);
  CHECK(u.generic);
  CHECK(euler(u.result, EulerMethod::SigmaSum) == 2);
  const SetOpResult i = set_ops(a, b, BoolOp::Intersection);
  CHECK(i.result.empty());
  CHECK(i.generic);
  // mixed scales meet at the common one
  const SetOpResult m = set_ops(fixture::cube(2), IntegralOrthotope::from_boxes(2, {{{1, 1}, {3, 3}}}, 2), BoolOp::Union);
  CHECK(m.result.scale() == 2);
  CHECK(volume(m.result, VolumeMethod::VoxelCount) == Rational(7, 4));
  CHECK(m.generic);
  CHECK_FALSE(set_ops(fixture::cube(2), IntegralOrthotope::from_cells(2, {{1, 1}}), BoolOp::Union).generic);
  CHECK_THROWS(set_ops(fixture::cube(2), fixture::cube(3), BoolOp::Union));

  // squares sharing an edge: the closed intersection is a segment
  const SetOpResult touch = set_ops(fixture::cube(2), fixture::cube(2).rescaled(1), BoolOp::Intersection);
  CHECK(touch.pure);
  const SetOpResult side = set_ops(fixture::cube(2), IntegralOrthotope::from_cells(2, {{1, 0}}), BoolOp::Intersection);
  CHECK(side.result.empty());
  CHECK_FALSE(side.pure);
  CHECK_FALSE(side.generic);
  const SetOpResult corner = set_ops(IntegralOrthotope::from_cells(2, {{0, 0}, {1, 0}}),
                                     IntegralOrthotope::from_cells(2, {{1, 1}, {1, 0}}), BoolOp::Intersection);
  CHECK(corner.result == IntegralOrthotope::from_cells(2, {{1, 0}}));
  CHECK(corner.pure);
  const SetOpResult spur = set_ops(IntegralOrthotope::from_cells(2, {{0, 0}, {1, 0}}),
                                   IntegralOrthotope::from_cells(2, {{1, 0}, {0, 1}}), BoolOp::Intersection);
  CHECK_FALSE(spur.pure);
}

// --- properties on the random suite ----------------------------------------

TEST_CASE("formulas agree with the cell oracles") {
  for (const auto& c : suite()) {
    CAPTURE(c.seed);
    const auto cells = oracle::cells_of(c.p);
    REQUIRE(check_generic(c.p).generic());
    const Rational v(static_cast<long long>(cells.size()));
    CHECK(volume(c.p, VolumeMethod::MuSum) == v);
    CHECK(volume(c.p, VolumeMethod::Determinantal) == v);
    CHECK(volume(c.p, VolumeMethod::VoxelCount) == v);
    const std::int64_t chi = oracle::cubical_euler(cells, c.dim);
    CHECK(euler(c.p, EulerMethod::SigmaSum) == chi);
    CHECK(euler(c.p, EulerMethod::CubicalComplex) == chi);
    CHECK(sigma_sum(c.p) % (std::int64_t{1} << c.dim) == 0);
    CHECK(vertex_census(c.p).by_mu == oracle::census_by_mu(cells, c.dim));

    const auto want = oracle::lattice_vertices(cells, c.dim);
    const auto got = vertices(c.p);
    REQUIRE(got.size() == want.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      Point x(c.dim);
      for (int j = 0; j < c.dim; ++j) x[j] = got[k].point[j] / 2;
      CHECK(x == want[k].point);
      CHECK(got[k].cone.mask() == want[k].cone);
    }
  }
}

TEST_CASE("corner laws") {
  for (const auto& c : suite()) {
    if (c.dim > 3) continue;
    const auto m = vertex_census(c.p).by_mu;
    auto n = [&](std::uint64_t mu) { return m.count(mu) ? static_cast<std::int64_t>(m.at(mu)) : 0; };
    const std::int64_t chi = euler(c.p, EulerMethod::CubicalComplex);
    if (c.dim == 2) CHECK(n(1) - n(3) == 4 * chi);
    else CHECK(n(1) - n(3) - n(5) + n(7) == 8 * chi);
  }
}

TEST_CASE("skeletons are d-regular and bipartite") {
  for (const auto& c : suite()) {
    const SkeletonGraph g = skeleton(c.p);
    CHECK(g.nodes.size() == vertices(c.p).size());
    for (std::size_t deg : g.degrees()) CHECK(deg == static_cast<std::size_t>(c.dim));
    CHECK(g.bipartite());
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const SkeletonArc& a : g.arcs) arcs.emplace_back(a.from, a.to);
    CHECK(oracle::two_colourable(g.nodes.size(), arcs));
  }
}

TEST_CASE("faces and slices are generic") {
  for (const auto& c : suite()) {
    CAPTURE(c.seed);
    const FacePoset poset = face_poset(c.p);
    for (const Face& f : poset.faces) CHECK(check_generic(f.closure).generic());

    CHECK(poset.f_vector().front() == vertices(c.p).size());

    // every vertex sits in C(d,k) faces of dimension k
    std::vector<std::vector<std::size_t>> up(poset.faces.size(), std::vector<std::size_t>(c.dim + 1, 0));
    for (auto [lo, hi] : poset.incidence) ++up[lo][poset.faces[hi].dim];
    for (std::size_t i = 0; i < poset.faces.size(); ++i) {
      if (poset.faces[i].dim != 0) continue;
      for (int k = 1; k < c.dim; ++k) CHECK(up[i][k] == binomial(c.dim, k));
    }

    for (Axis a = 1; a <= c.dim; ++a) {
      const auto& br = c.p.breaks(a - 1);
      for (Coord v = 2 * br.front() - 1; v <= 2 * br.back() + 1; ++v) {
        CAPTURE(a);
        CAPTURE(v);
        CHECK(check_generic(cross_section(c.p, {{a, v}})).generic());
      }
    }
  }
}
