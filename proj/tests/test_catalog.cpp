#include <catch2/catch_amalgamated.hpp>
#include <horopack/catalog.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <string>

using namespace horopack;
using Catch::Matchers::WithinAbs;

namespace {

const double kPi = std::numbers::pi;

// Shared load of the embedded catalog; the loader already revalidates, so
// constructing this once keeps the suite fast.
const std::vector<CoxeterSimplex>& catalog() {
  static const std::vector<CoxeterSimplex> cat = load_catalog();
  return cat;
}

const CoxeterSimplex& entry(const std::string& key) {
  const CoxeterSimplex* s = find_simplex(catalog(), key);
  REQUIRE(s != nullptr);
  return *s;
}

nlohmann::json embedded_document() { return nlohmann::json::parse(kCatalogJson); }

}  // namespace

TEST_CASE("embedded catalog loads all 23 tilings with unique ids") {
  const auto& cat = catalog();
  REQUIRE(cat.size() == 23);
  std::set<std::string> ids;
  for (const auto& s : cat) ids.insert(s.id);
  CHECK(ids.size() == 23);
  // First and last rows pin the ordering of the document.
  CHECK(cat.front().id == "V3");
  CHECK(cat.back().id == "CR3");
}

TEST_CASE("every entry passes structural validation") {
  for (const auto& s : catalog()) {
    INFO(s.id);
    ValidationReport rep = validate_simplex(s);
    CHECK(rep.pass);
    for (const auto& c : rep.checks) {
      INFO(c.name << " residual " << c.residual);
      CHECK(c.pass);
    }
    // Geometric residuals are at machine precision; only the closed-form
    // versus tabulated volume comparison is allowed a wider margin.
    for (const auto& c : rep.checks)
      if (c.name != "volume") CHECK(c.residual <= 1e-9);
  }
}

TEST_CASE("commensurability classes and cusp counts partition as recorded") {
  std::map<std::string, int> cls;
  std::map<int, int> cusps;
  for (const auto& s : catalog()) {
    cls[s.cls]++;
    cusps[s.n_ideal()]++;
  }
  CHECK(cls["336"] == 11);
  CHECK(cls["344"] == 6);
  CHECK(cls["536"] == 2);
  CHECK(cls["other"] == 4);
  CHECK(cusps[1] == 9);
  CHECK(cusps[2] == 9);
  CHECK(cusps[3] == 2);
  CHECK(cusps[4] == 3);

  // The largest class realizes every possible number of cusps.
  std::set<int> spread;
  for (const auto& s : catalog())
    if (s.cls == "336") spread.insert(s.n_ideal());
  CHECK(spread == std::set<int>{1, 2, 3, 4});
}

TEST_CASE("one-cusp reference simplex carries the expected coordinates") {
  const auto& v3 = entry("V3");
  CHECK(v3.witt == "V̄₃");
  CHECK(v3.cls == "336");
  REQUIRE(v3.n_ideal() == 1);
  CHECK(v3.ideal_indices() == std::vector<int>{0});

  const double s3 = std::sqrt(3.0);
  const Vec4 a0{1.0, 0.0, 0.0, 1.0};
  const Vec4 a1{1.0, 0.0, 0.0, 0.0};
  const Vec4 a2{1.0, 0.5, 0.0, 0.0};
  const Vec4 a3{1.0, 0.5, s3 / 6.0, 0.0};
  const std::array<Vec4, 4> expect{a0, a1, a2, a3};
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 4; ++c)
      CHECK_THAT(v3.vertices[i][c], WithinAbs(expect[i][c], 1e-15));

  // Dihedral data: angles pi/3, pi/3, pi/6 along the diagram path.
  REQUIRE(v3.schlafli_edges.size() == 3);
  CHECK(v3.schlafli_edges[0] == std::array<int, 3>{0, 1, 3});
  CHECK(v3.schlafli_edges[1] == std::array<int, 3>{1, 2, 3});
  CHECK(v3.schlafli_edges[2] == std::array<int, 3>{2, 3, 6});
  CHECK_THAT(minkowski(v3.faces[0], v3.faces[1]), WithinAbs(-0.5, 1e-12));
  CHECK_THAT(minkowski(v3.faces[1], v3.faces[2]), WithinAbs(-0.5, 1e-12));
  CHECK_THAT(minkowski(v3.faces[2], v3.faces[3]),
             WithinAbs(-std::cos(kPi / 6.0), 1e-12));
  CHECK_THAT(minkowski(v3.faces[0], v3.faces[2]), WithinAbs(0.0, 1e-12));
  CHECK_THAT(minkowski(v3.faces[0], v3.faces[3]), WithinAbs(0.0, 1e-12));
  CHECK_THAT(minkowski(v3.faces[1], v3.faces[3]), WithinAbs(0.0, 1e-12));

  // Cell volume Λ(π/3)/8 and the optimal one-ball density behind it.
  CHECK(v3.volume.kind == VolumeForm::Kind::Lobachevsky);
  CHECK_THAT(v3.volume.coeff, WithinAbs(0.125, 0.0));
  CHECK_THAT(v3.volume.angle, WithinAbs(kPi / 3.0, 1e-15));
  CHECK_THAT(v3.volume_value(), WithinAbs(0.042289233600402178, 1e-15));
  CHECK(v3.has_exact_volume());
  CHECK(v3.density.kind == DensityForm::Kind::Closed);
  CHECK_THAT(v3.density_value(), WithinAbs(0.85327608831408074, 1e-15));
}

TEST_CASE("face forms are unit, inward, and reproduce every diagram label") {
  for (const auto& s : catalog()) {
    INFO(s.id);
    for (int i = 0; i < 4; ++i) {
      CHECK_THAT(minkowski(s.faces[i], s.faces[i]), WithinAbs(1.0, 1e-12));
      CHECK(apply_form(s.faces[i], s.vertices[i]) > 0.0);
      for (int j = 0; j < 4; ++j)
        if (j != i)
          CHECK_THAT(apply_form(s.faces[i], s.vertices[j]), WithinAbs(0.0, 1e-9));
    }
    // Recover the label of every pair from the Gram matrix and compare with
    // the stored edge list (absent pair = right angle).
    std::map<std::pair<int, int>, int> stored;
    for (const auto& e : s.schlafli_edges) stored[{e[0], e[1]}] = e[2];
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        double g = minkowski(s.faces[i], s.faces[j]);
        auto it = stored.find({i, j});
        if (it == stored.end()) {
          CHECK_THAT(g, WithinAbs(0.0, 1e-9));
        } else {
          CHECK_THAT(g, WithinAbs(-std::cos(kPi / it->second), 1e-9));
        }
      }
  }
}

TEST_CASE("gram matrices have hyperbolic signature") {
  for (const auto& s : catalog()) {
    INFO(s.id);
    Mat4 g{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) g[i][j] = minkowski(s.faces[i], s.faces[j]);
    auto ev = symmetric_eigenvalues(g);
    CHECK(ev[0] < 0.0);
    CHECK(ev[1] > 1e-9);
    CHECK(ev[3] > ev[1] - 1e-15);
  }
}

TEST_CASE("lookup accepts id, display symbol, and aliases") {
  const auto& cat = catalog();
  CHECK(find_simplex(cat, "V3") == &cat.front());
  CHECK(find_simplex(cat, "v3") == &cat.front());       // ids fold case
  CHECK(find_simplex(cat, "V̄₃") == &cat.front());       // display symbol
  CHECK(find_simplex(cat, "[3,3,6]") == &cat.front());  // alias
  CHECK(find_simplex(cat, "[6,3,3]") == &cat.front());
  CHECK(entry("[3,4^1,1]").id == "O3");
  CHECK(entry("[(3,5,3,6)]").id == "HV3c");
  CHECK(entry("bv3c").id == "BV3c");
  CHECK(entry("[4,4,4]").id == "N3");
  CHECK(find_simplex(cat, "nope") == nullptr);
  CHECK(find_simplex(cat, "") == nullptr);

  // Every alias resolves back to its own entry — no collisions.
  for (const auto& s : cat)
    for (const auto& a : s.aliases) {
      INFO(s.id << " alias " << a);
      CHECK(find_simplex(cat, a) == &s);
    }
}

TEST_CASE("tabulated decimals and closed forms are mutually consistent") {
  const auto& hv3 = entry("HV3");
  REQUIRE(hv3.volume.kind == VolumeForm::Kind::Numeric);
  REQUIRE(hv3.volume_exact.has_value());
  CHECK_THAT(*hv3.volume_exact, WithinAbs(0.17150166128249995, 1e-14));
  CHECK_THAT(hv3.volume.value, WithinAbs(0.17150, 0.0));
  CHECK(hv3.volume_value() == *hv3.volume_exact);
  CHECK(hv3.has_exact_volume());

  const auto& hp3 = entry("HP3");
  CHECK_THAT(*hp3.volume_exact, WithinAbs(2.0 * *hv3.volume_exact, 1e-14));

  const auto& av3 = entry("AV3");
  REQUIRE(av3.volume_exact.has_value());
  CHECK_THAT(*av3.volume_exact, WithinAbs(0.36410710036488098, 1e-14));

  // Purely tabulated rows: no closed form is invented for them.
  for (const char* id : {"BV3c", "HV3c", "CR3"}) {
    const auto& s = entry(id);
    CHECK(s.volume.kind == VolumeForm::Kind::Numeric);
    CHECK_FALSE(s.has_exact_volume());
  }
  CHECK_THAT(entry("CR3").volume_value(), WithinAbs(0.556282, 0.0));

  // Recorded ball-volume ratios always sum to one, one per cusp.
  for (const auto& s : catalog()) {
    if (s.ratios.empty()) continue;
    INFO(s.id);
    CHECK(static_cast<int>(s.ratios.size()) == s.n_ideal());
    double sum = 0.0;
    for (double r : s.ratios) sum += r;
    CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("entry markers: derived coordinates and mismatch flags") {
  for (const auto& s : catalog()) {
    INFO(s.id);
    CHECK(s.derived_coordinates == (s.id == "PP3"));
    CHECK(s.flag_on_mismatch == (s.id == "VV3"));
  }
  // The one entry without a recorded ratio row is the flagged one.
  for (const auto& s : catalog()) {
    INFO(s.id);
    CHECK(s.ratios.empty() == (s.id == "VV3"));
  }
}

TEST_CASE("supergroup lattice: volume ratios match every recorded index") {
  const auto& cat = catalog();
  auto checks = subgroup_lattice(cat);
  REQUIRE(checks.size() == 19);
  for (const auto& c : checks) {
    INFO(c.parent << " -> " << c.child << " index " << c.index);
    CHECK(c.pass);
    CHECK(c.residual <= 1e-12);
  }
  auto has = [&](const std::string& p, const std::string& ch, int idx) {
    for (const auto& c : checks)
      if (c.parent == p && c.child == ch && c.index == idx) return true;
    return false;
  };
  CHECK(has("V3", "Y3", 4));
  CHECK(has("V3", "P3", 2));
  CHECK(has("V3", "Z3", 6));
  CHECK(has("V3", "DV3", 5));
  CHECK(has("Y3", "VV3", 5));
  CHECK(has("Y3", "VP3", 3));
  CHECK(has("HV3", "HP3", 2));

  // Spot values behind two of the indices.
  CHECK_THAT(entry("Y3").volume_value(),
             WithinAbs(4.0 * entry("V3").volume_value(), 1e-15));
  CHECK_THAT(entry("Z3").volume_value(),
             WithinAbs(6.0 * entry("V3").volume_value(), 1e-15));
}

TEST_CASE("serialization round-trips through the loader") {
  const auto& cat = catalog();
  std::string text = catalog_to_json(cat);
  auto again = load_catalog(text);
  REQUIRE(again.size() == cat.size());
  for (size_t k = 0; k < cat.size(); ++k) {
    INFO(cat[k].id);
    CHECK(again[k].id == cat[k].id);
    CHECK(again[k].witt == cat[k].witt);
    CHECK(again[k].cls == cat[k].cls);
    CHECK(again[k].schlafli_edges == cat[k].schlafli_edges);
    for (int i = 0; i < 4; ++i)
      for (int c = 0; c < 4; ++c) {
        CHECK(again[k].vertices[i][c] == cat[k].vertices[i][c]);
        CHECK(again[k].faces[i][c] == cat[k].faces[i][c]);
      }
    CHECK(again[k].volume_value() == cat[k].volume_value());
    CHECK(again[k].density_value() == cat[k].density_value());
    CHECK(again[k].ratios == cat[k].ratios);
  }
}

TEST_CASE("catalog files load from disk") {
  const std::string path = "catalog_roundtrip_tmp.json";
  {
    std::ofstream out(path, std::ios::binary);
    out << catalog_to_json(catalog());
  }
  auto cat = load_catalog_file(path);
  CHECK(cat.size() == 23);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_catalog_file("no_such_catalog.json"), parse_error);
}

TEST_CASE("malformed documents are rejected as parse errors") {
  CHECK_THROWS_AS(load_catalog("{"), parse_error);
  CHECK_THROWS_AS(load_catalog("[]"), parse_error);
  CHECK_THROWS_AS(load_catalog("{\"version\":1}"), parse_error);

  // A minimal entry missing its fields names the entry in the message.
  nlohmann::json doc;
  doc["version"] = 1;
  doc["entries"] = nlohmann::json::array({nlohmann::json{{"id", "X"}}});
  try {
    load_catalog(doc.dump());
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("'X'") != std::string::npos);
  }

  // Unparseable coordinate expressions surface as parse errors too.
  doc = embedded_document();
  doc["entries"][0]["vertices"][0][0] = "sqrt(";
  CHECK_THROWS_AS(load_catalog(doc.dump()), parse_error);

  // Duplicated ids are structural, not syntactic.
  doc = embedded_document();
  doc["entries"].push_back(doc["entries"][0]);
  CHECK_THROWS_AS(load_catalog(doc.dump()), validation_error);
}

TEST_CASE("validation rejects tampered geometry") {
  SECTION("perturbed vertex breaks incidence") {
    nlohmann::json doc = embedded_document();
    REQUIRE(doc["entries"][0]["id"] == "V3");
    doc["entries"][0]["vertices"][2][1] = "1/2 + 1/1000";
    try {
      load_catalog(doc.dump());
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      std::string msg = e.what();
      CHECK(msg.find("V3") != std::string::npos);
      CHECK(msg.find("incidence") != std::string::npos);
    }
  }

  SECTION("wrong ideal flag breaks vertex classification") {
    nlohmann::json doc = embedded_document();
    doc["entries"][0]["ideal"][0] = false;
    try {
      load_catalog(doc.dump());
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(std::string(e.what()).find("vertex_class") != std::string::npos);
    }
  }

  SECTION("wrong dihedral label breaks the gram check") {
    nlohmann::json doc = embedded_document();
    doc["entries"][0]["schlafli_edges"][0][2] = 4;
    try {
      load_catalog(doc.dump());
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(std::string(e.what()).find("gram") != std::string::npos);
    }
  }

  SECTION("dangling lattice child is rejected") {
    nlohmann::json doc = embedded_document();
    doc["entries"][0]["lattice_edges"].push_back({"QQ9", 2});
    CHECK_THROWS_AS(load_catalog(doc.dump()), validation_error);
  }
}

TEST_CASE("validation report lists every check by name") {
  ValidationReport rep = validate_simplex(entry("V3"));
  CHECK(rep.id == "V3");
  CHECK(rep.pass);
  std::set<std::string> names;
  for (const auto& c : rep.checks) names.insert(c.name);
  CHECK(names == std::set<std::string>{"vertex_class", "incidence", "unit_forms",
                                       "gram", "signature", "volume", "ratios",
                                       "ideal_count"});
  CHECK(rep.max_residual <= 1e-9);
}
