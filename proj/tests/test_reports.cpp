#include <catch2/catch_amalgamated.hpp>

#include <qcube/json_io.hpp>

using namespace qcube;

TEST_CASE("cyclotomic rendering") {
    Cyclotomic z = Cyclotomic::root(3, 1) + Cyclotomic::rational(3, make_rat(1, 2));
    json j = cyclotomic_to_json(z);
    CHECK(j["p"] == 3);
    CHECK(j["coeffs"][0] == "1/2");
    CHECK(j["coeffs"][1] == "1");
}

TEST_CASE("subspace rendering carries residue-coefficient lists") {
    Field F(4);
    Subspace X = canonicalize(F, {{2, 1}}, 2);  // span of (x, 1)
    json j = subspace_to_json(F, X);
    CHECK(j["n"] == 2);
    CHECK(j["k"] == 1);
    CHECK(j["pivots"][0] == 2);                      // 1-based
    CHECK(j["cols"][0][0] == json::array({0, 1}));   // x
    CHECK(j["cols"][0][1] == json::array({1, 0}));   // 1
}

TEST_CASE("chain index rendering") {
    Field F(2);
    ChainIndex alpha = ChainIndex{}.extended_bit(1).extended_chi({1, 0});
    json j = chain_index_to_json(F, alpha);
    CHECK(j[0] == 1);
    CHECK(j[1]["chi"][0] == json::array({1}));
    CHECK(j[1]["chi"][1] == json::array({0}));
}

TEST_CASE("spectrum report JSON") {
    json j = spectrum_report_to_json(spectrum_report(Field(2), 3, true));
    CHECK(j["q"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["charpoly_verified"] == true);
    CHECK(j["pairs"].size() == 4);
    CHECK(j["pairs"][0]["lambda"] == "7");
    CHECK(j["pairs"][1]["mult"] == "7");
}

TEST_CASE("eigenbasis JSON is grouped by weight and deterministic") {
    Field F(3);
    EigenTower tower = build_eigen_tower(F, 2);
    json a = eigenbasis_to_json(F, tower[2]);
    json b = eigenbasis_to_json(F, build_eigen_tower(F, 2)[2]);
    CHECK(a.dump(2) == b.dump(2));
    CHECK(a["count"] == 6);
    int prev = -1;
    for (const auto& vec : a["vectors"]) {
        int k = vec["k"].get<int>();
        CHECK(k >= prev);
        prev = k;
    }
}

TEST_CASE("tree report JSON") {
    Field F(2);
    json j = tree_report_to_json(tree_count_report(2, 2, &F, true, true));
    CHECK(j["formula"] == "162");
    CHECK(j["minors"] == "162");
    CHECK(j["enumeration"] == "162");
    CHECK(j["agreement"] == true);
}

TEST_CASE("matrix market body") {
    Field F(2);
    std::string mm = matrix_market(adjacency_matrix(F, 1));
    CHECK(mm.rfind("%%MatrixMarket matrix coordinate integer general\n", 0) == 0);
    CHECK(mm.find("\n2 2 2\n") != std::string::npos);
    CHECK(mm.find("1 2 1\n") != std::string::npos);
    CHECK(mm.find("2 1 1\n") != std::string::npos);
    json idx = matrix_index_json(F, subspace_order(F, 1));
    CHECK(idx["rows"].size() == 2);
}
