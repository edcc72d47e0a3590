/*
   Copyright 2026 The anyonic project

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "anyonic.h"

using nlohmann::json;

namespace {

struct Owned {
    char* ptr = nullptr;
    ~Owned() { any_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

}  // namespace

TEST_CASE("version and error state") {
    CHECK(std::string(any_version()) == "0.1.0");
    CHECK(any_last_error() != nullptr);
}

TEST_CASE("null arguments are rejected") {
    CHECK(any_hopf_czn(2, nullptr) == ANY_ERR_INVALID_ARGUMENT);
    CHECK(any_hopf_from_json(nullptr, nullptr) == ANY_ERR_INVALID_ARGUMENT);
    any_hopf* h = nullptr;
    CHECK(any_hopf_czn(0, &h) == ANY_ERR_INVALID_ARGUMENT);
    CHECK(std::string(any_last_error()).size() > 0);
}

TEST_CASE("builtin structures verify and round trip") {
    any_hopf* h = nullptr;
    REQUIRE(any_hopf_czn(3, &h) == ANY_OK);

    Owned report;
    int all_pass = 0;
    REQUIRE(any_hopf_verify(h, &report.ptr, &all_pass) == ANY_OK);
    CHECK(all_pass == 1);
    json rep = json::parse(report.str());
    CHECK(rep.at("all_pass").get<bool>());

    Owned text;
    REQUIRE(any_hopf_to_json(h, &text.ptr) == ANY_OK);
    any_hopf* back = nullptr;
    REQUIRE(any_hopf_from_json(text.ptr, &back) == ANY_OK);
    Owned text2;
    REQUIRE(any_hopf_to_json(back, &text2.ptr) == ANY_OK);
    CHECK(text.str() == text2.str());

    any_hopf_free(back);
    any_hopf_free(h);
}

TEST_CASE("parse failures set the error message") {
    any_hopf* h = nullptr;
    CHECK(any_hopf_from_json("{ not json", &h) == ANY_ERR_PARSE);
    CHECK(std::string(any_last_error()).find("hopf file") != std::string::npos);
    CHECK(any_hopf_from_json("{\"n\": 2}", &h) == ANY_ERR_PARSE);
}

TEST_CASE("quasitriangular verification and transmutation") {
    any_hopf* h = nullptr;
    any_rmatrix* r = nullptr;
    REQUIRE(any_hopf_czn(4, &h) == ANY_OK);
    REQUIRE(any_rmatrix_czn(4, &r) == ANY_OK);

    int all_pass = 0;
    REQUIRE(any_quasitriangular_verify(h, r, nullptr, &all_pass) == ANY_OK);
    CHECK(all_pass == 1);

    Owned rtext;
    REQUIRE(any_rmatrix_to_json(h, r, &rtext.ptr) == ANY_OK);
    any_rmatrix* rback = nullptr;
    REQUIRE(any_rmatrix_from_json(h, rtext.ptr, &rback) == ANY_OK);
    Owned rtext2;
    REQUIRE(any_rmatrix_to_json(h, rback, &rtext2.ptr) == ANY_OK);
    CHECK(rtext.str() == rtext2.str());
    any_rmatrix_free(rback);

    any_hopf* hb = nullptr;
    REQUIRE(any_transmute(h, r, &hb) == ANY_OK);
    Owned report;
    REQUIRE(any_hopf_verify(hb, &report.ptr, &all_pass) == ANY_OK);
    CHECK(all_pass == 1);

    any_hopf_free(hb);
    any_rmatrix_free(r);
    any_hopf_free(h);
}

TEST_CASE("braid support checks") {
    int support18[] = {0, 3, 6, 9, 12, 15};
    int symmetric = 0, flip = 0;
    REQUIRE(any_braid_support_check(18, support18, 6, support18, 6, &symmetric, &flip) == ANY_OK);
    CHECK(symmetric == 1);
    CHECK(flip == 0);

    int support9[] = {0, 3, 6};
    REQUIRE(any_braid_support_check(9, support9, 3, support9, 3, &symmetric, &flip) == ANY_OK);
    CHECK(symmetric == 1);
    CHECK(flip == 1);

    int support5[] = {1};
    REQUIRE(any_braid_support_check(5, support5, 1, support5, 1, &symmetric, &flip) == ANY_OK);
    CHECK(symmetric == 0);

    Owned report;
    int agree = 0;
    REQUIRE(any_braid_check_report(9, support9, 3, support9, 3, &report.ptr, &agree) == ANY_OK);
    CHECK(agree == 1);
    json rep = json::parse(report.str());
    CHECK(rep.at("criterion").at("flip").get<bool>());
    CHECK(rep.at("matrix").at("flip").get<bool>());

    int bad[] = {9};
    CHECK(any_braid_support_check(5, bad, 1, bad, 1, &symmetric, &flip) ==
          ANY_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cocyclic module lifecycle") {
    any_hopf* h = nullptr;
    REQUIRE(any_hopf_czn(2, &h) == ANY_OK);

    any_cocyclic* cm = nullptr;
    REQUIRE(any_cocyclic_build(h, nullptr, 3, 0, 0, &cm) == ANY_OK);

    Owned report;
    int all_pass = 0;
    REQUIRE(any_cocyclic_verify(cm, &report.ptr, &all_pass) == ANY_OK);
    CHECK(all_pass == 1);

    int defect = -1;
    REQUIRE(any_cocyclic_para_defect(cm, 2, &defect) == ANY_OK);
    CHECK(defect == 0);

    Owned operators;
    REQUIRE(any_cocyclic_operators_json(cm, &operators.ptr) == ANY_OK);
    json ops = json::parse(operators.str());
    CHECK(ops.at("level").get<int>() == 3);

    Owned table;
    REQUIRE(any_cohomology(cm, 2, &table.ptr) == ANY_OK);
    json t = json::parse(table.str());
    CHECK(t.at("rows").size() == 3);
    CHECK(t.at("rows")[0].at("hc").get<int>() == 1);
    CHECK(t.at("rows")[1].at("hc").get<int>() == 0);
    CHECK(t.at("rows")[2].at("hc").get<int>() == 1);

    CHECK(any_cohomology(cm, 3, &table.ptr) == ANY_ERR_LEVEL_BOUND);

    any_cocyclic_free(cm);

    any_cocyclic* too_big = nullptr;
    CHECK(any_cocyclic_build(h, nullptr, 4, 10, 0, &too_big) == ANY_ERR_CAP_EXCEEDED);
    any_hopf_free(h);
}

TEST_CASE("triple build over the c interface") {
    any_hopf* h = nullptr;
    REQUIRE(any_hopf_czn(2, &h) == ANY_OK);
    any_triple* t = nullptr;
    REQUIRE(any_triple_build(h, nullptr, nullptr, 2, 0, &t) == ANY_OK);
    Owned report;
    int all_pass = 0;
    REQUIRE(any_triple_verify(t, &report.ptr, &all_pass) == ANY_OK);
    CHECK(all_pass == 1);
    json rep = json::parse(report.str());
    CHECK(rep.at("all_pass").get<bool>());
    any_triple_free(t);
    any_hopf_free(h);
}

TEST_CASE("pipeline reports are deterministic") {
    Owned first, second;
    int all_pass = 0;
    REQUIRE(any_pipeline(2, 2, 0, &first.ptr, &all_pass) == ANY_OK);
    CHECK(all_pass == 1);
    REQUIRE(any_pipeline(2, 2, 0, &second.ptr, &all_pass) == ANY_OK);
    CHECK(first.str() == second.str());

    json rep = json::parse(first.str());
    CHECK(rep.at("all_pass").get<bool>());
    CHECK(rep.at("cohomology").at("rows")[0].at("hc").get<int>() == 1);
}
