#include "rootfold/presets.hpp"
#include "rootfold/verify.hpp"

#include <doctest.h>

using namespace rootfold;

TEST_CASE("every embedded preset parses") {
    auto names = preset_names();
    CHECK(names.size() >= 25);
    for (const auto& n : names) {
        CAPTURE(n);
        Preset p = load_preset(n);
        CHECK(p.name == n);
        CHECK(p.mu_bound > 0);
    }
    CHECK(load_preset("tower-u3").tower.has_value());
}

TEST_CASE("malformed presets are input errors") {
    CHECK_THROWS_AS(parse_preset("{"), InputError);
    CHECK_THROWS_AS(parse_preset(R"({"type": "A3", "frobenius": [2, 1, 3]})"), InputError);
    CHECK_THROWS_AS(parse_preset(R"({"type": "A3", "inertia": [[1, 2]]})"), InputError);
    CHECK_THROWS_AS(parse_preset(R"({"type": "Q3"})"), InputError);
    CHECK_THROWS_AS(load_preset("no-such-preset"), InputError);
}

TEST_CASE("explicit root datum") {
    Preset p = parse_preset(R"({"name": "pgl2", "datum": {"rank": 1, "simple_roots": [[1]], "simple_coroots": [[2]]}})");
    CHECK(p.datum.datum.semisimple_rank == 1);
    CHECK(p.datum.datum.simple_coroot(0) == IVec{2});
}

TEST_CASE("verification is deterministic and passes on small presets") {
    std::vector<Preset> ps{load_preset("split-A2"), load_preset("su3-unramified"), load_preset("u3-ramified")};
    VerifyReport a = verify_presets(ps), b = verify_presets(ps, VerifyOptions{{}, 4, true, 1000000, 1});
    CHECK(a.to_json() == b.to_json());
    CHECK(a.exit_code() == 0);
    CHECK(a.count(CheckStatus::Fail) == 0);
}
