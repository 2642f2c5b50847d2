#include <doctest.h>

#include "gitstab/repro.hpp"

using namespace gitstab;
using namespace gitstab::repro;

TEST_CASE("entry ids are unique and sorted in the index") {
    const auto& idx = entry_index();
    CHECK(idx.size() > 50);
    for (std::size_t i = 1; i < idx.size(); ++i) CHECK(idx[i - 1].first < idx[i].first);
}

TEST_CASE("filtered run keeps exactly the matching entries") {
    ReproConfig cfg;
    cfg.entry_filter = {"mu/"};
    auto rep = run_repro(cfg);
    CHECK(rep.entries.size() == 8);
    for (const auto& e : rep.entries) {
        CHECK(e.id.rfind("mu/", 0) == 0);
        CHECK(e.match);
    }
    CHECK(rep.clean());
}

TEST_CASE("verdict entries match the three source conclusions") {
    ReproConfig cfg;
    cfg.entry_filter = {"verdict/"};
    auto rep = run_repro(cfg);
    CHECK(rep.entries.size() == 4);
    CHECK(rep.clean());
}

TEST_CASE("report json is deterministic for a fixed config") {
    ReproConfig cfg;
    cfg.entry_filter = {"mu/", "golden/", "jinv/"};
    auto a = run_repro(cfg).to_json(cfg).dump();
    auto b = run_repro(cfg).to_json(cfg).dump();
    CHECK(a == b);
}

TEST_CASE("concurrent execution yields the same report") {
    ReproConfig cfg;
    cfg.entry_filter = {"mu/", "profile/i-star"};
    auto serial = run_repro(cfg);
    ReproConfig cfg2 = cfg;
    cfg2.jobs = 4;
    auto parallel = run_repro(cfg2);
    // the environment stamp carries the job count; entry payloads agree
    REQUIRE(serial.entries.size() == parallel.entries.size());
    for (std::size_t i = 0; i < serial.entries.size(); ++i) {
        CHECK(serial.entries[i].id == parallel.entries[i].id);
        CHECK(serial.entries[i].computed == parallel.entries[i].computed);
        CHECK(serial.entries[i].match == parallel.entries[i].match);
    }
}

TEST_CASE("config round-trips through json") {
    Json j;
    j["assignment"] = Json{{"beta", "3"}};
    j["beta_sweep"] = Json::array({"2", "7"});
    j["jinv_trials"] = 5;
    j["seed"] = 99;
    j["entries"] = Json::array({"hf/"});
    j["limits"] = Json{{"saturation_cap", 12}};
    auto cfg = config_from_json(j);
    CHECK(cfg.assignment.at("beta").str() == "3");
    CHECK(cfg.beta_sweep.size() == 2);
    CHECK(cfg.jinv_trials == 5);
    CHECK(cfg.seed == 99);
    CHECK(cfg.limits.saturation_cap == 12);
    auto rep = run_repro(cfg);
    for (const auto& e : rep.entries) CHECK(e.id.rfind("hf/", 0) == 0);
}

TEST_CASE("full default run is clean") {
    ReproConfig cfg;
    auto rep = run_repro(cfg);
    CHECK(rep.mismatched == 0);
    CHECK(rep.reference_mismatched == 0);
    for (const auto& e : rep.entries)
        if (!e.match) MESSAGE("mismatch: ", e.id);
}
