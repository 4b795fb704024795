#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "andrasfai/errors.hpp"
#include "andrasfai/serialize.hpp"

using namespace andrasfai;

TEST(SpectrumJson, SchemaAndPrecision) {
    const auto doc = nlohmann::json::parse(spectrum_to_json(spectrum_closed_form(3)));
    EXPECT_EQ(doc.at("k"), 3);
    EXPECT_EQ(doc.at("n"), 8);
    EXPECT_EQ(doc.at("source"), "closed-form");
    EXPECT_EQ(doc.at("pairs"), nlohmann::json({{1, 7}, {2, 6}, {3, 5}}));
    // 1 + sqrt(2) to 12 significant digits.
    EXPECT_EQ(doc.at("values")[3].get<double>(), -2.41421356237);
}

TEST(SpectrumJson, OddOrderPairsAndNullK) {
    Spectrum s{std::nullopt, {2.0, 0.5, 0.5}, SpectrumSource::general_circulant};
    const auto doc = nlohmann::json::parse(spectrum_to_json(s));
    EXPECT_TRUE(doc.at("k").is_null());
    EXPECT_EQ(doc.at("pairs"), nlohmann::json({{1, 2}}));
}

TEST(SpectrumJson, ReserializationIsByteIdentical) {
    for (std::size_t k = 1; k <= 120; ++k) {
        const auto first = spectrum_to_json(spectrum_closed_form(k));
        const auto second = spectrum_to_json(spectrum_from_json(first));
        ASSERT_EQ(first, second) << "k=" << k;
    }
}

TEST(SpectrumJson, MalformedInput) {
    EXPECT_THROW(spectrum_from_json("{"), ValidationError);
    EXPECT_THROW(spectrum_from_json(R"({"k":null,"n":3,"source":"oracle","values":[1,2]})"), ValidationError);
    EXPECT_THROW(spectrum_from_json(R"({"k":null,"n":1,"source":"magic","values":[1]})"), ValidationError);
    EXPECT_THROW(spectrum_from_json(R"({"n":1})"), ValidationError);
}

TEST(SpectrumCsv, HeaderRowsAndClassIds) {
    const auto csv = spectrum_to_csv(spectrum_closed_form(3));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "l,value,class_id");
    std::getline(in, line);
    EXPECT_EQ(line, "0,3,0");
    std::getline(in, line);
    EXPECT_EQ(line, "1,0.414213562373,1");
    std::size_t rows = 2;
    std::string last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    EXPECT_EQ(rows, 8u);
    EXPECT_EQ(last, "7,0.414213562373,1");  // paired with l = 1
}

TEST(SpectrumTable, SixDecimalsAndPairColumn) {
    const auto table = spectrum_to_table(spectrum_closed_form(5));
    std::istringstream in(table);
    std::string header, row0, row1;
    std::getline(in, header);
    std::getline(in, row0);
    std::getline(in, row1);
    EXPECT_NE(row0.find("5.000000"), std::string::npos) << row0;
    std::istringstream fields(row1);
    std::size_t l = 0, mirror = 0, cls = 0;
    double x = 0.0;
    fields >> l >> x >> mirror >> cls;
    EXPECT_EQ(l, 1u);
    EXPECT_EQ(mirror, 13u);
    EXPECT_NEAR(x, 0.356896, 1e-6);
}

TEST(ReportJson, SchemaFields) {
    const auto report = run_sweep(3, 4, 600);
    const auto doc = nlohmann::json::parse(report_to_json(report));
    EXPECT_EQ(doc.at("k_range"), nlohmann::json({3, 4}));
    ASSERT_EQ(doc.at("verdicts").size(), 14u);
    const auto& v = doc.at("verdicts")[4];
    EXPECT_EQ(v.at("claim"), "plus_one");
    EXPECT_EQ(v.at("k"), 3);
    EXPECT_EQ(v.at("status"), "erratum_detected");
    EXPECT_TRUE(v.at("predicted").is_object());
    EXPECT_TRUE(v.at("observed").is_object());
    EXPECT_TRUE(v.at("detail").is_string());
    EXPECT_TRUE(doc.at("min_gap").is_number());
    EXPECT_TRUE(doc.at("oracle_max_dev").is_number());
    EXPECT_TRUE(doc.contains("wall_time"));
    EXPECT_FALSE(nlohmann::json::parse(report_to_json(report, false)).contains("wall_time"));
}

TEST(ReportTable, SummaryLine) {
    const auto table = report_to_table(run_sweep(2, 3, 0));
    EXPECT_NE(table.find("13 pass, 0 fail, 1 erratum_detected"), std::string::npos) << table;
}
