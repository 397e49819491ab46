#include "gammaprod/batch.hpp"
#include "gammaprod/report.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace gammaprod {
namespace {

VerificationRecord without_timing(VerificationRecord r) {
    r.elapsed_ms = 0;
    return r;
}

TEST(Report, JsonRoundTripOfRealRecords) {
    const PrecisionContext ctx(128);
    std::vector<CheckTask> tasks;
    for (IdentityId id : kIdentityCatalog) {
        auto part = tasks_for_range(id, 1, 6);
        tasks.insert(tasks.end(), part.begin(), part.end());
    }
    const auto records = run_batch(tasks, ctx, 1);
    std::stringstream ss;
    write_records(ss, records, ReportFormat::json);
    EXPECT_EQ(read_json_records(ss), records);
}

// Arbitrary ASCII (quotes, backslashes, control characters) survives the trip.
TEST(Report, JsonRoundTripProperty) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> ch(1, 127);
    std::uniform_int_distribution<int> len(0, 40);
    auto random_string = [&] {
        std::string s;
        for (int i = len(rng); i > 0; --i) s.push_back(static_cast<char>(ch(rng)));
        return s;
    };
    std::vector<VerificationRecord> records;
    for (int i = 0; i < 200; ++i) {
        VerificationRecord r;
        r.identity_id = kIdentityCatalog[static_cast<std::size_t>(i) % kIdentityCatalog.size()];
        r.parameter = static_cast<std::int64_t>(rng() >> 1);
        r.prec_bits = static_cast<int>(rng() % 100000);
        r.lhs = random_string();
        r.rhs = random_string();
        r.abs_err = random_string();
        r.rel_err = random_string();
        r.pass = rng() & 1;
        r.elapsed_ms = static_cast<std::int64_t>(rng() >> 20);
        records.push_back(r);
    }
    std::stringstream ss;
    write_records(ss, records, ReportFormat::json);
    EXPECT_EQ(read_json_records(ss), records);
}

TEST(Report, CsvColumnOrder) {
    VerificationRecord r;
    r.identity_id = IdentityId::midpoint;
    r.parameter = 7;
    r.prec_bits = 256;
    r.lhs = "1.5e+00";
    r.rhs = "1.5e+00";
    r.abs_err = "0";
    r.rel_err = "0";
    r.pass = true;
    r.elapsed_ms = 3;
    std::stringstream ss;
    write_records(ss, {r}, ReportFormat::csv);
    EXPECT_EQ(ss.str(), "identity_id,parameter,prec_bits,lhs,rhs,abs_err,rel_err,pass,elapsed_ms\n"
                        "midpoint,7,256,1.5e+00,1.5e+00,0,0,true,3\n");
}

TEST(Report, TextMentionsVerdict) {
    VerificationRecord r;
    r.identity_id = IdentityId::sine_lcm;
    r.parameter = 4;
    r.pass = false;
    EXPECT_NE(text_row(r).find("FAIL"), std::string::npos);
    EXPECT_NE(text_row(r).find("sine_lcm"), std::string::npos);
}

TEST(Report, ParseFormat) {
    EXPECT_EQ(parse_format("csv"), ReportFormat::csv);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Batch, RangeClipsToDomain) {
    const auto tasks = tasks_for_range(IdentityId::theorem1_direct, 1, 64);
    ASSERT_EQ(tasks.size(), 63u);
    EXPECT_EQ(tasks.front().parameter, 2);
    EXPECT_EQ(tasks.back().parameter, 64);
    EXPECT_TRUE(tasks_for_range(IdentityId::farey_product, 1, 1).empty());
}

TEST(Batch, JobsDoNotChangeResults) {
    const PrecisionContext ctx(96);
    std::vector<CheckTask> tasks = tasks_for_range(IdentityId::theorem1_direct, 2, 40);
    auto more = tasks_for_range(IdentityId::farey_product, 2, 12);
    tasks.insert(tasks.end(), more.begin(), more.end());

    const auto serial = run_batch(tasks, ctx, 1);
    for (unsigned jobs : {2u, 3u, 8u}) {
        const auto parallel = run_batch(tasks, ctx, jobs);
        ASSERT_EQ(parallel.size(), serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i)
            EXPECT_EQ(without_timing(parallel[i]), without_timing(serial[i])) << "jobs " << jobs << " index " << i;
    }
}

TEST(Batch, PropagatesErrors) {
    const PrecisionContext ctx(64);
    const std::vector<CheckTask> tasks{{IdentityId::eq1, 3}, {IdentityId::eq1, 100000}};
    EXPECT_THROW(run_batch(tasks, ctx, 2), std::domain_error);
}

} // namespace
} // namespace gammaprod
