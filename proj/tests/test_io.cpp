#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ltpss/csv.hpp"
#include "ltpss/errors.hpp"

using namespace ltpss;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ltpss_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string write(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream(p) << content;
        return p.string();
    }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("returns loader") {
    TempDir tmp;
    const auto good = tmp.write("r.csv",
                                "date,AA,BB\n"
                                "2000-01,0.01,-0.02\n"
                                "2000-02,0.005,0.03\n");
    const auto panel = load_returns_csv(good);
    CHECK(panel.asset_names == std::vector<std::string>{"AA", "BB"});
    CHECK(panel.dates == std::vector<std::string>{"2000-01", "2000-02"});
    CHECK(panel.returns(0, 1) == -0.02);
    CHECK(panel.returns(1, 0) == 0.005);

    // CRLF and trailing blank lines are tolerated.
    const auto crlf = tmp.write("crlf.csv", "date,A\r\n2000-01,0.01\r\n\r\n2000-02,0.02\r\n");
    CHECK(load_returns_csv(crlf).periods() == 2);

    CHECK_THROWS_AS(load_returns_csv(tmp.file("missing.csv")), IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("e.csv", "")), IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("h.csv", "time,A\n2000-01,0.1\n")), IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("n.csv", "date,A\n")), IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("rag.csv", "date,A,B\n2000-01,0.1\n")),
                    IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("txt.csv", "date,A\n2000-01,abc\n")),
                    IoError);
    CHECK_THROWS_AS(
        load_returns_csv(tmp.write("dup.csv", "date,A\n2000-01,0.1\n2000-01,0.2\n")),
        IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("lo.csv", "date,A\n2000-01,-1.0\n")),
                    IoError);
    CHECK_THROWS_AS(load_returns_csv(tmp.write("inf.csv", "date,A\n2000-01,inf\n")),
                    IoError);
}

TEST_CASE("factors loader") {
    TempDir tmp;
    const std::string header = "date,MKT,SMB,HML,RMW,CMA,RF\n";
    const auto good = tmp.write(
        "f.csv", header + "2000-01,0.01,0.002,-0.003,0.001,0.0,0.0004\n"
                          "2000-02,-0.02,0.001,0.002,0.0,0.001,0.0004\n");
    const auto fp = load_factors_csv(good);
    CHECK(fp.factors.rows() == 2);
    CHECK(fp.factors(0, 0) == 0.01);
    CHECK(fp.factors(1, 4) == 0.001);
    CHECK(fp.rf(1) == 0.0004);
    CHECK(fp.dates[0] == "2000-01");

    CHECK_THROWS_AS(load_factors_csv(tmp.write("bad.csv", "date,MKT,SMB\n")), IoError);
    CHECK_THROWS_AS(
        load_factors_csv(tmp.write(
            "swap.csv", "date,SMB,MKT,HML,RMW,CMA,RF\n2000-01,0,0,0,0,0,0\n")),
        IoError);
    CHECK_THROWS_AS(
        load_factors_csv(tmp.write(
            "order.csv", header + "2000-02,0,0,0,0,0,0\n2000-01,0,0,0,0,0,0\n")),
        IoError);
    CHECK_THROWS_AS(
        load_factors_csv(tmp.write(
            "dup.csv", header + "2000-01,0,0,0,0,0,0\n2000-01,0,0,0,0,0,0\n")),
        IoError);
}

TEST_CASE("matrix round trip") {
    TempDir tmp;
    Matrix m(2, 2);
    m << 0.5, -1.0 / 3.0, 1e-17, 2.0;
    const auto path = tmp.file("m.csv");
    write_matrix_csv(m, path);
    const Matrix back = load_matrix_csv(path);
    CHECK((m - back).norm() == 0.0);  // %.17g is lossless for doubles

    CHECK_THROWS_AS(load_matrix_csv(tmp.write("rect.csv", "1,2,3\n4,5,6\n")), IoError);
    CHECK_THROWS_AS(load_matrix_csv(tmp.write("emp.csv", "")), IoError);
}

TEST_CASE("strategy returns formatting") {
    TempDir tmp;
    StrategyReturns sr;
    sr.dates = {"2000-01", "2000-02"};
    sr.values = {0.0133, -0.5};
    const auto path = tmp.file("sr.csv");
    write_strategy_returns_csv(sr, path);
    CHECK(slurp(path) == "date,return\n2000-01,0.0133000000\n2000-02,-0.5000000000\n");
}

TEST_CASE("trace formatting") {
    TempDir tmp;
    SolverTrace trace;
    trace.records.push_back({1, 2.0, 0.5, {}, {}});
    trace.records.push_back({2, 1.0, 0.25, {}, {}});
    trace.records.push_back({3, 1.0, 0.0, {}, {}});
    const auto path = tmp.file("t.csv");
    write_trace_csv(trace, path);
    const auto text = slurp(path);
    std::istringstream ss(text);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "iter,objective,gap,log10_obj_decrease");
    std::getline(ss, line);
    CHECK(line == "1,2,0.5,0");  // log10 of the unit decrease
    std::getline(ss, line);
    CHECK(line == "2,1,0.25,");  // zero decrease -> blank
    std::getline(ss, line);
    CHECK(line == "3,1,0,");  // last row always blank
}

TEST_CASE("report round trip") {
    TempDir tmp;
    BacktestReport report;
    report.rows.push_back({"sf", 0.0133, 0.25, 0.1, 0.002, 0.04, 0.3});
    ReportRow sparse;
    sparse.strategy = "ltpss";
    sparse.mr = -0.001;
    sparse.mdd = 1.0;
    report.rows.push_back(sparse);
    const auto path = tmp.file("report.csv");
    write_report_csv(report, path);

    const auto text = slurp(path);
    CHECK(text ==
          "strategy,MR,SR,IR,alpha,pvalue,MDD\n"
          "sf,0.013300,0.250000,0.100000,0.002000,0.040000,0.300000\n"
          "ltpss,-0.001000,,,,,1.000000\n");

    const auto back = read_report_csv(path);
    REQUIRE(back.rows.size() == 2);
    CHECK(back.rows[0].strategy == "sf");
    CHECK(back.rows[0].sr == doctest::Approx(0.25));
    CHECK(back.rows[0].pvalue == doctest::Approx(0.04));
    CHECK(back.rows[1].strategy == "ltpss");
    CHECK(!back.rows[1].sr.has_value());
    CHECK(!back.rows[1].alpha.has_value());
    CHECK(back.rows[1].mdd == 1.0);

    CHECK_THROWS_AS(read_report_csv(tmp.write("bad.csv", "strategy,MR\n")), IoError);
    CHECK_THROWS_AS(
        read_report_csv(tmp.write("rag.csv",
                                  "strategy,MR,SR,IR,alpha,pvalue,MDD\nsf,0.1\n")),
        IoError);
}
