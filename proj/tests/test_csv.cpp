#include <gtest/gtest.h>

#include <sstream>

#include "tieroc/csv.hpp"
#include "tieroc/error.hpp"

using namespace tieroc;

TEST(Csv, SplitLine) {
    EXPECT_EQ(csv::split_line(" 1 , 0 "), (std::vector<std::string>{"1", "0"}));
    EXPECT_EQ(csv::split_line("\"a,b\",2"), (std::vector<std::string>{"a,b", "2"}));
    EXPECT_EQ(csv::split_line("x"), (std::vector<std::string>{"x"}));
}

TEST(Csv, RowsWithHeaderAndCrlf) {
    std::istringstream in("score,label\r\n0.5,1\r\n\r\n0.25,0\r\n1e-3,0\n");
    const Dataset d = csv::read_rows(in);
    EXPECT_EQ(d.n_pos(), 1u);
    EXPECT_EQ(d.n_neg(), 2u);
    EXPECT_DOUBLE_EQ(d.rows()[2].score, 0.001);
}

TEST(Csv, RowsWithoutHeader) {
    std::istringstream in("3,1\n2,0\n");
    EXPECT_EQ(csv::read_rows(in).size(), 2u);
}

TEST(Csv, RowsRejectBadData) {
    std::istringstream nan_score("score,label\n1,0\n1,1\nNaN,0\n");
    EXPECT_THROW(csv::read_rows(nan_score), IngestError);
    std::istringstream bad_label("1,2\n");
    EXPECT_THROW(csv::read_rows(bad_label), IngestError);
    std::istringstream text_label("1,yes\n");
    EXPECT_THROW(csv::read_rows(text_label), IngestError);
    std::istringstream extra("1,0,3\n");
    EXPECT_THROW(csv::read_rows(extra), IngestError);
    std::istringstream header_only("score,label\n");
    EXPECT_THROW(csv::read_rows(header_only), IngestError);
    std::istringstream late_text("1,0\nabc,1\n");
    EXPECT_THROW(csv::read_rows(late_text), IngestError);
}

TEST(Csv, ErrorsCarryLineNumbers) {
    std::istringstream in("score,label\n1,0\n2,7\n");
    try {
        csv::read_rows(in);
        FAIL() << "expected IngestError";
    } catch (const IngestError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
        EXPECT_EQ(e.code(), "INGEST");
    }
}

TEST(Csv, Counts) {
    std::istringstream in("value,neg,pos\n1,31,21\n2,21,14\n3,11,17\n4,21,33\n");
    const Dataset d = csv::read_counts(in);
    EXPECT_EQ(d.n_neg(), 84u);
    EXPECT_EQ(d.n_pos(), 85u);
}

TEST(Csv, CountsRejectBadData) {
    std::istringstream negative("1,-3,2\n");
    EXPECT_THROW(csv::read_counts(negative), IngestError);
    std::istringstream fractional("1,2.5,2\n");
    EXPECT_THROW(csv::read_counts(fractional), IngestError);
    std::istringstream dup("1,1,0\n1,0,1\n");
    EXPECT_THROW(csv::read_counts(dup), IngestError);
    std::istringstream zero("5,0,0\n");
    EXPECT_THROW(csv::read_counts(zero), IngestError);
}

TEST(Csv, MissingFile) {
    EXPECT_THROW(csv::read_rows_file("/nonexistent/file.csv"), IngestError);
}
