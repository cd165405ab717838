#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <thread>

#include <httplib.h>

#include "chordal/service.hpp"
#include "oracles.hpp"

using namespace chordal;

TEST_CASE("run_cli ratio") {
    const CommandResult ok = run_cli({"ratio", "--n", "4", "--d", "1.5"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.stdout_payload == "m = 5.000000000\n");

    const CommandResult center = run_cli({"ratio", "--n", "4", "--d", "2.0"});
    CHECK(center.exit_code == 3);
    CHECK(center.stdout_payload.empty());
    CHECK(center.stderr_payload.find("center-chord") != std::string::npos);

    CHECK(run_cli({"ratio", "--n", "4", "--d", "0.5"}).exit_code == 3);
}

TEST_CASE("run_cli usage errors exit 2") {
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"ratio", "--n", "4"}).exit_code == 2);
    CHECK(run_cli({"ratio", "--n", "4", "--d", "1.5", "--bogus"}).exit_code == 2);
    CHECK(run_cli({"ratio", "--n", "four", "--d", "1.5"}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("run_cli solve, verify, catalog, replicate") {
    const CommandResult solve = run_cli({"solve", "--n", "4", "--m", "25", "--json"});
    REQUIRE(solve.exit_code == 0);
    const Json doc = Json::parse(solve.stdout_payload);
    CHECK(std::abs(doc["d"].get<double>() - 1.75) < 1e-9);
    CHECK(doc["residual"].get<double>() <= 1e-9);

    const CommandResult human = run_cli({"solve", "--n", "8", "--m", "9"});
    CHECK(human.exit_code == 0);
    CHECK(human.stdout_payload.rfind("d = 3.192702", 0) == 0);

    CHECK(run_cli({"verify", "--n", "4", "--d", "1.5", "--m", "5"}).exit_code == 0);
    const CommandResult wrong = run_cli({"verify", "--n", "4", "--d", "1.5", "--m", "6"});
    CHECK(wrong.exit_code == 3);
    CHECK(wrong.stdout_payload.rfind("FAIL", 0) == 0);

    const CommandResult listing = run_cli({"catalog", "--json"});
    CHECK(listing.exit_code == 0);
    CHECK(Json::parse(listing.stdout_payload).size() == 14);

    const CommandResult rep = run_cli({"replicate", "--n", "4", "--d", "1.5", "--k", "3", "--json"});
    REQUIRE(rep.exit_code == 0);
    const Json chain = Json::parse(rep.stdout_payload);
    REQUIRE(chain.size() == 2);
    CHECK(std::abs(chain[0]["d"].get<double>() - 1.75) < 1e-9);
    CHECK(std::abs(chain[1]["d"].get<double>() - 1.880808598) < 1e-8);
}

TEST_CASE("run_cli render writes a file") {
    const auto path = std::filesystem::temp_directory_path() / "chordal_render_test.svg";
    std::filesystem::remove(path);
    const CommandResult r = run_cli({"render", "--n", "4", "--d", "1.5", "--depth", "2", "--out", path.string()});
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(oracle::count_occurrences(svg, "class=\"inner\"") == 2);
    std::filesystem::remove(path);

    CHECK(run_cli({"render", "--n", "4", "--d", "1.5", "--depth", "12"}).exit_code == 3);
}

TEST_CASE("construction payload") {
    const HttpReply r = handle_api("/api/construction", {{"n", "4"}, {"d", "1.5"}});
    REQUIRE(r.status == 200);
    const Json doc = Json::parse(r.body);
    CHECK(doc["n"] == 4);
    CHECK(std::abs(doc["ratio"].get<double>() - 5.0) < 1e-9);
    CHECK(doc["outer"].size() == 4);
    CHECK(doc["chords"].size() == 4);
    CHECK(doc["inner"].size() == 4);
    CHECK(doc["chords"][0][0][0].get<double>() == doctest::Approx(std::sqrt(0.5)));
    // Numbers travel with round-trip precision.
    CHECK(r.body.find("0.7071067811865476") != std::string::npos);

    const HttpReply hex = handle_api("/api/construction", {{"n", "6"}, {"d", "2.5"}});
    CHECK(std::abs(Json::parse(hex.body)["ratio"].get<double>() - 13.0) < 1e-6);

    // CLI --json and the service emit the same document.
    const CommandResult cli = run_cli({"ratio", "--n", "6", "--d", "2.5", "--json"});
    CHECK(Json::parse(cli.stdout_payload) == Json::parse(hex.body));
}

TEST_CASE("service errors") {
    const HttpReply low = handle_api("/api/construction", {{"n", "4"}, {"d", "0.5"}});
    CHECK(low.status == 400);
    CHECK(Json::parse(low.body).contains("error"));
    CHECK(handle_api("/api/construction", {{"n", "4"}, {"d", "2"}}).status == 400);
    CHECK(handle_api("/api/construction", {{"n", "4"}}).status == 400);
    CHECK(handle_api("/api/construction", {{"n", "4.5"}, {"d", "1.5"}}).status == 400);
    CHECK(handle_api("/api/construction", {{"n", "4"}, {"d", "abc"}}).status == 400);
    CHECK(handle_api("/api/solve", {{"n", "4"}, {"m", "1"}}).status == 400);
    CHECK(handle_api("/api/nope", {}).status == 404);
}

TEST_CASE("solve and catalog endpoints") {
    const Json s25 = Json::parse(handle_api("/api/solve", {{"n", "4"}, {"m", "25"}}).body);
    CHECK(std::abs(s25["d"].get<double>() - 1.75) < 1e-9);
    CHECK(s25.contains("residual"));
    const Json s5 = Json::parse(handle_api("/api/solve", {{"n", "4"}, {"m", "5"}}).body);
    CHECK(std::abs(s5["d"].get<double>() - 1.5) < 1e-9);

    const Json cat = Json::parse(handle_api("/api/catalog", {}).body);
    CHECK(cat.size() == 14);
    const Json verified = Json::parse(handle_api("/api/catalog", {{"verify", "1"}}).body);
    CHECK(verified[0].contains("pass"));
}

TEST_CASE("port resolution") {
    ::unsetenv("CHORDAL_PORT");
    CHECK(resolve_port(0) == 8037);
    ::setenv("CHORDAL_PORT", "9100", 1);
    CHECK(resolve_port(0) == 9100);
    CHECK(resolve_port(9200) == 9200);
    ::setenv("CHORDAL_PORT", "garbage", 1);
    CHECK(resolve_port(0) == 8037);
    ::unsetenv("CHORDAL_PORT");
}

TEST_CASE("live HTTP server answers concurrent requests like serial ones") {
    auto server = make_server();
    const int port = server->bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread listener([&] { server->listen_after_bind(); });
    server->wait_until_ready();

    const std::vector<std::string> paths = {
        "/api/construction?n=4&d=1.5", "/api/construction?n=6&d=2.5", "/api/solve?n=4&m=25",
        "/api/construction?n=4&d=0.5", "/api/catalog",               "/api/solve?n=8&m=3",
    };
    std::vector<std::pair<int, std::string>> serial;
    {
        httplib::Client client("127.0.0.1", port);
        for (const auto& p : paths) {
            auto res = client.Get(p);
            REQUIRE(res);
            serial.emplace_back(res->status, res->body);
        }
    }
    CHECK(serial[0].first == 200);
    CHECK(std::abs(Json::parse(serial[0].second)["ratio"].get<double>() - 5.0) < 1e-9);
    CHECK(serial[3].first == 400);

    std::vector<std::future<bool>> jobs;
    for (int worker = 0; worker < 8; ++worker) {
        jobs.push_back(std::async(std::launch::async, [&, worker] {
            httplib::Client client("127.0.0.1", port);
            bool same = true;
            for (int round = 0; round < 5; ++round) {
                const std::size_t i = (worker + round) % paths.size();
                auto res = client.Get(paths[i]);
                same = same && res && res->status == serial[i].first && res->body == serial[i].second;
            }
            return same;
        }));
    }
    for (auto& job : jobs) CHECK(job.get());

    server->stop();
    listener.join();
}
