#include <catch_amalgamated.hpp>

#include <mckay3/catalog.hpp>

using namespace mckay3;

namespace {

struct Built {
  Group g;
  CharTable t;
  ClassFunction chi_v;
};

Built build(const GroupSpec& s) {
  Group g = Group::generate(s.generators);
  CharTable t = character_table(g);
  ClassFunction v = defining_character(g, t.classes);
  return {std::move(g), std::move(t), std::move(v)};
}

// Total loops = sum_phi (phi chi_V, phi) = sum over classes of chi_V, by
// column orthogonality; no character table needed.
long loops_by_classes(const Group& g) {
  CycNum s;
  for (const auto& c : conjugacy_classes(g)) s += g.element(c.representative).trace();
  return s.to_rational().get_num().get_si();
}

}  // namespace

TEST_CASE("fast and reference adjacency routes agree", "[quiver]") {
  for (const auto& spec : {exceptional("E"), exceptional("H"), exceptional("I"), type_d(), type_b_tetra(1),
                           type_a({2, 4, {1, 0}, {0, 1}})}) {
    const auto [g, t, v] = build(spec);
    REQUIRE(mckay_adjacency(t, v) == mckay_adjacency_reference(t, v));
  }
}

TEST_CASE("quiver identities on catalog groups", "[quiver][property]") {
  for (const auto& spec : {exceptional("E"), exceptional("F"), exceptional("H"), exceptional("I"), exceptional("J"),
                           type_c(), type_d(), type_b_tetra(0, 1, true), type_b_dihedral(4, 1, 1)}) {
    const auto [g, t, v] = build(spec);
    const Quiver q = mckay_quiver(t, v);
    REQUIRE(static_cast<long>(loops(q)) == loops_by_classes(g));
    const IntMatrix a = q.adjacency();
    for (std::size_t j = 0; j < a.size(); ++j) {
      long in = 0, out = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        in += a[i][j] * q.degrees[i];
        out += a[j][i] * q.degrees[i];
      }
      REQUIRE(in == 3 * q.degrees[j]);
      REQUIRE(out == 3 * q.degrees[j]);
    }
  }
}

TEST_CASE("type E quiver size", "[quiver]") {
  const auto [g, t, v] = build(exceptional("E"));
  const Quiver q = mckay_quiver(t, v);
  CHECK(q.vertex_count() == 14);
  CHECK(q.arrows.size() == 36);
  CHECK(loops(q) == 0);
  CHECK(strongly_connected(q));
}

TEST_CASE("C2 acting by (-1, -1, 1) has loops", "[quiver]") {
  const auto [g, t, v] = build(type_a(cyclic_datum(2, 1, 1)));
  const Quiver q = mckay_quiver(t, v);
  CHECK(q.vertex_count() == 2);
  CHECK(q.adjacency() == IntMatrix{{1, 2}, {2, 1}});
  CHECK(loops(q) == 2);
}

TEST_CASE("strongly connected exactly for faithful characters", "[quiver][property]") {
  for (const auto& spec : {exceptional("E"), exceptional("J"), type_d()}) {
    const auto [g, t, v] = build(spec);
    for (const auto& chi : t.irreducibles) {
      if (chi.degree() != 3) continue;
      REQUIRE(strongly_connected(mckay_quiver(t, chi)) == is_faithful(chi));
    }
    ClassFunction three = trivial_character(t.data);
    three = three + trivial_character(t.data) + trivial_character(t.data);
    REQUIRE_FALSE(strongly_connected(mckay_quiver(t, three)));
  }
}

TEST_CASE("GL2 embedding labels det arrows", "[quiver]") {
  const GroupSpec spec = type_b_dihedral(3, 1, 0, 3);  // H(6,1) x C3
  const Group g = Group::generate(spec.generators);
  const CharTable t = character_table(g);
  const ClassFunction rho = block_character(g, t.classes);
  const PowerMap sq = power_map(g, t.classes, 2);
  const Quiver q = gl2_embed(t, rho, sq);
  CHECK(loops(q) == 0);
  std::size_t det = 0;
  for (const auto& a : q.arrows) det += a.label == "det";
  CHECK(det == t.size());  // det^-1 is linear: one arrow out of each vertex
  CHECK(det % 3 == 0);
  // forgetting labels gives the McKay quiver of the 3-dim embedding
  CHECK(q.adjacency() == mckay_adjacency(t, defining_character(g, t.classes)));
  CHECK_THROWS_AS(gl2_embed(t, trivial_character(t.data), sq), InvalidInput);
  CHECK_THROWS_AS(gl2_embed(t, rho + rho, sq), InvalidInput);
}

TEST_CASE("DOT export marks cut and det arrows", "[quiver]") {
  Quiver q;
  q.degrees = {1, 1, 2};
  q.arrows = {{0, 1, "plain"}, {1, 2, "det"}, {2, 0, "e3"}};
  const std::string dot = export_dot(q, {0});
  CHECK(dot.find("0 -> 1 [color=red];") != std::string::npos);
  CHECK(dot.find("1 -> 2 [style=dashed];") != std::string::npos);
  CHECK(dot.find("2 -> 0 [label=\"e3\"];") != std::string::npos);
  CHECK(dot.find("2 [label=\"2 (2)\"];") != std::string::npos);
  CHECK(adjacency_csv(q.adjacency()) == "0,1,0\n0,0,1\n1,0,0\n");
}

TEST_CASE("adjacency round trip and validation", "[quiver]") {
  const IntMatrix a{{0, 2, 0}, {0, 0, 1}, {1, 0, 1}};
  const Quiver q = Quiver::from_adjacency(a);
  CHECK(q.adjacency() == a);
  CHECK(q.arrows.size() == 5);
  CHECK(two_cycles(Quiver::from_adjacency({{0, 2}, {1, 0}})) == 2);
  CHECK_THROWS_AS(Quiver::from_adjacency({{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Quiver::from_adjacency({{-1}}), InvalidInput);
  Quiver bad;
  bad.degrees = {1};
  bad.arrows = {{0, 3, "plain"}};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
}
