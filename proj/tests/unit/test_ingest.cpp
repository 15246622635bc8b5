#include "fixtures.hpp"
#include "iaa/analysis/group_model.hpp"
#include "iaa/core/measures.hpp"
#include "iaa/error.hpp"
#include "iaa/ingest/format.hpp"
#include "iaa/ingest/group.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace iaa;
using namespace iaa::ingest;

namespace {

ErrorCode code_of(auto &&fn)
{
  try
  {
    fn();
  }
  catch (Error const &e)
  {
    return e.code();
  }
  FAIL("expected an iaa::Error");
  return ErrorCode::Io;
}

constexpr char const *kHeader = "participant_id,group,word,left,right\n";

}  // namespace

TEST_CASE("csv row maps directly onto a record")
{
  auto const ds = parse_dataset(std::string{kHeader} + "p01,patient,impossible to do,0.0,1.5\n", Format::Csv);
  REQUIRE(ds.records().size() == 1);
  auto const &r = ds.records().front();
  CHECK(r.participant_id == "p01");
  CHECK(r.group == "patient");
  CHECK(r.word == "impossible to do");
  CHECK(r.interval == core::Interval{0.0, 1.5});
  CHECK(ds.words() == std::vector<std::string>{"impossible to do"});
  CHECK(ds.grid() == core::DomainGrid{});
}

TEST_CASE("csv validation errors")
{
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,5,3\n", Format::Csv); }) ==
        ErrorCode::InvalidInterval);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,5,10.5\n", Format::Csv); }) ==
        ErrorCode::DomainViolation);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,1,2\np01,patient,W ,3,4\n", Format::Csv); }) ==
        ErrorCode::DuplicateResponse);
  CHECK(code_of([] { parse_dataset("id,group,word,left,right\np,g,w,1,2\n", Format::Csv); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset("", Format::Csv); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,1,5,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,abc,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,nan,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p01,patient,w,1e400,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + ",patient,w,1,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p,patient,\"w,1,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("check_dataset collects every issue with its line")
{
  std::string const input = std::string{kHeader} +
                            "p1,patient,w,1,2\n"
                            "p2,patient,w,5,3\n"
                            "\n"
                            "p3,patient,w,1,11\n"
                            "p1,patient,w,2,3\n";
  auto const report = check_dataset(input, Format::Csv);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.dataset.has_value());
  REQUIRE(report.issues.size() == 3);
  CHECK(report.issues[0].code == ErrorCode::InvalidInterval);
  CHECK(report.issues[0].line == 3);
  CHECK(report.issues[0].participant_id == "p2");
  CHECK(report.issues[0].word == "w");
  CHECK(report.issues[1].code == ErrorCode::DomainViolation);
  CHECK(report.issues[1].line == 5);
  CHECK(report.issues[2].code == ErrorCode::DuplicateResponse);
  CHECK(report.issues[2].line == 6);
  CHECK(report.issues[2].describe().find("line 2") != std::string::npos);
}

TEST_CASE("csv tolerates quoting, CRLF, BOM and padding; labels are canonical")
{
  std::string const input = "\xEF\xBB\xBFParticipant_ID, Group ,word,left,right\r\n"
                            "\"p,1\",patient,\" Impossible To Do \", 0.5 ,1\r\n"
                            "p2,physio,\"say \"\"what\"\"\",2,3\r\n";
  auto const ds = parse_dataset(input, Format::Csv);
  REQUIRE(ds.records().size() == 2);
  CHECK(ds.records()[0].participant_id == "p,1");
  CHECK(ds.records()[0].word == "impossible to do");
  CHECK(ds.records()[0].interval == core::Interval{0.5, 1.0});
  CHECK(ds.records()[1].word == "say \"what\"");
  CHECK(ds.has_word("IMPOSSIBLE to do"));
}

TEST_CASE("csv rejects invalid UTF-8")
{
  CHECK(code_of([] { parse_dataset(std::string{kHeader} + "p\xff,patient,w,1,2\n", Format::Csv); }) ==
        ErrorCode::ParseError);
  CHECK_NOTHROW(parse_dataset(std::string{kHeader} + "p\xc3\xa9,patient,w,1,2\n", Format::Csv));
}

TEST_CASE("csv with an explicit word order and grid")
{
  ParseOptions options{core::DomainGrid{0.0, 100.0, 1.0}, {"B", "a"}};
  auto const   ds = parse_dataset(std::string{kHeader} + "p,g,a,10,20\np,g,b,50,90\n", Format::Csv, options);
  CHECK(ds.words() == std::vector<std::string>{"b", "a"});
  CHECK(ds.grid().max() == 100.0);

  options.words = {"a"};
  CHECK(code_of([&] { parse_dataset(std::string{kHeader} + "p,g,a,10,20\np,g,b,50,90\n", Format::Csv, options); }) ==
        ErrorCode::UnknownWord);
}

TEST_CASE("json schema")
{
  std::string const input = R"({
    "scale": {"min": 0, "max": 10, "step": 0.1},
    "words": ["Impossible to do", "not at all difficult"],
    "responses": [
      {"participant_id": "p01", "group": "patient", "word": "impossible to do", "left": 0.0, "right": 1.5},
      {"participant_id": "p01", "group": "patient", "word": "not at all difficult", "left": 8, "right": 10}
    ]
  })";
  auto const ds = parse_dataset(input, Format::Json);
  CHECK(ds.grid() == core::DomainGrid{0.0, 10.0, 0.1});
  CHECK(ds.words() == std::vector<std::string>{"impossible to do", "not at all difficult"});
  CHECK(ds.records().size() == 2);
  CHECK(ds.participant_count() == 1);

  std::istringstream stream{input};
  CHECK(parse_dataset(stream, Format::Json) == ds);
}

TEST_CASE("json errors")
{
  CHECK(code_of([] { parse_dataset("{", Format::Json); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset("[]", Format::Json); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(R"({"words": []})", Format::Json); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_dataset(R"({"scale": {"min": 0, "max": 10, "step": 3}, "responses": []})", Format::Json); }) ==
        ErrorCode::InvalidGrid);
  CHECK(code_of([] {
          parse_dataset(R"({"responses": [{"participant_id": 1, "group": "g", "word": "w", "left": 1, "right": 2}]})",
                        Format::Json);
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_dataset(R"({"responses": [{"participant_id": "p", "group": "g", "word": "w", "left": "1", "right": 2}]})",
                        Format::Json);
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          parse_dataset(
              R"({"words": ["a"], "responses": [{"participant_id": "p", "group": "g", "word": "b", "left": 1, "right": 2}]})",
              Format::Json);
        }) == ErrorCode::UnknownWord);
  CHECK(code_of([] {
          parse_dataset(R"({"responses": [{"participant_id": "p", "group": "g", "word": "b", "left": 3, "right": 2}]})",
                        Format::Json);
        }) == ErrorCode::InvalidInterval);
  CHECK(code_of([] { parse_dataset(R"({"words": ["a", "A "], "responses": []})", Format::Json); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("serialize then parse is the identity")
{
  auto const ds = iaa::testing::clinic_dataset(5);
  CHECK(ds.participant_count() == 36);
  CHECK(ds.records().size() == 180);

  CHECK(parse_dataset(serialize_json(ds), Format::Json) == ds);
  CHECK(parse_dataset(serialize_csv(ds), Format::Csv, {ds.grid(), ds.words()}) == ds);
  // the CSV carries words in first-appearance order, which here is questionnaire order
  CHECK(parse_dataset(serialize_csv(ds), Format::Csv) == ds);

  // awkward labels and non-terminating binary fractions survive as well
  auto const odd = Dataset::create(core::DomainGrid{0.0, 1.0, 0.001}, {"a, \"quoted\" word"},
                                   {{"id 1", " spaced", "a, \"quoted\" word", core::Interval{0.1 + 0.2, 1.0 / 3.0}}});
  CHECK(parse_dataset(serialize_json(odd), Format::Json) == odd);
  CHECK(parse_dataset(serialize_csv(odd), Format::Csv, {odd.grid(), {}}) == odd);
}

TEST_CASE("format names")
{
  CHECK(parse_format("CSV") == Format::Csv);
  CHECK(parse_format("json") == Format::Json);
  CHECK(code_of([] { parse_format("xml"); }) == ErrorCode::ParseError);
  CHECK(format_from_extension("data/x.JSON") == Format::Json);
  CHECK(format_from_extension("x.csv") == Format::Csv);
  CHECK_FALSE(format_from_extension("x.txt").has_value());
}

TEST_CASE("group specs")
{
  auto const spec = parse_group_spec(" PS = physio, surgeon,physio");
  CHECK(spec.name == "PS");
  CHECK(spec.members == std::vector<std::string>{"physio", "surgeon"});
  CHECK(code_of([] { parse_group_spec("PS"); }) == ErrorCode::InvalidGroupSpec);
  CHECK(code_of([] { parse_group_spec("=a"); }) == ErrorCode::InvalidGroupSpec);
  CHECK(code_of([] { parse_group_spec("PS=a,,b"); }) == ErrorCode::InvalidGroupSpec);
}

TEST_CASE("select_group filters and concatenates")
{
  auto const ds   = iaa::testing::clinic_dataset(3);
  auto const word = iaa::testing::tess_words()[2];

  auto const patients = select_group(ds, GroupSpec::single("patient"), word);
  CHECK(patients.size() == 12);

  auto const physio  = select_group(ds, GroupSpec::single("physio"), word);
  auto const surgeon = select_group(ds, GroupSpec::single("surgeon"), word);
  auto const ps      = select_group(ds, GroupSpec{"PS", {"physio", "surgeon"}}, word);
  REQUIRE(ps.size() == 24);
  CHECK(std::equal(physio.begin(), physio.end(), ps.begin()));
  CHECK(std::equal(surgeon.begin(), surgeon.end(), ps.begin() + 12));

  for (auto const &w : ds.words())
  {
    CHECK(select_group(ds, GroupSpec{"PS", {"physio", "surgeon"}}, w).size() ==
          select_group(ds, GroupSpec::single("physio"), w).size() +
              select_group(ds, GroupSpec::single("surgeon"), w).size());
  }

  CHECK(code_of([&] { select_group(ds, GroupSpec::single("patient"), "unheard of"); }) == ErrorCode::UnknownWord);
  CHECK(code_of([&] { select_group(ds, GroupSpec::single("nurse"), word); }) == ErrorCode::UnknownGroup);
  CHECK(code_of([&] { select_group(ds, GroupSpec{"none", {}}, word); }) == ErrorCode::InvalidGroupSpec);
}

TEST_CASE("skipped words shrink N downstream")
{
  auto const               full = iaa::testing::clinic_dataset(4);
  auto const               word = iaa::testing::tess_words()[3];
  std::vector<ResponseRecord> kept;
  for (auto const &r : full.records())
  {
    bool const skipped = r.word == word && (r.participant_id == "patient_3" || r.participant_id == "patient_9");
    if (!skipped)
    {
      kept.push_back(r);
    }
  }
  auto const ds        = Dataset::create(full.grid(), full.words(), kept);
  auto const intervals = select_group(ds, GroupSpec::single("patient"), word);
  CHECK(intervals.size() == 10);

  auto const model = analysis::build_group_model(ds, GroupSpec::single("patient"));
  auto const *wm   = model.find(word);
  REQUIRE(wm != nullptr);
  CHECK(wm->count == 10);
  // every membership is a multiple of 1/10
  for (double mu : wm->set.memberships())
  {
    CHECK(mu * 10.0 == doctest::Approx(std::round(mu * 10.0)).epsilon(1e-12));
  }
  CHECK(core::height(wm->set) * 10.0 == doctest::Approx(std::round(core::height(wm->set) * 10.0)));
}

TEST_CASE("word order override and merging")
{
  auto const ds = iaa::testing::clinic_dataset(6);
  std::vector<std::string> reversed(ds.words().rbegin(), ds.words().rend());
  CHECK(ds.with_word_order(reversed).words() == reversed);
  CHECK(code_of([&] { ds.with_word_order({"impossible to do"}); }) == ErrorCode::UnknownWord);
  CHECK(code_of([&] { ds.with_word_order({"x", "y", "z", "u", "v"}); }) == ErrorCode::UnknownWord);

  auto const a = parse_dataset(std::string{kHeader} + "p1,g,w,1,2\n", Format::Csv);
  auto const b = parse_dataset(std::string{kHeader} + "p2,g,v,1,2\n", Format::Csv);
  auto const merged = merge({a, b});
  CHECK(merged.records().size() == 2);
  CHECK(merged.words() == std::vector<std::string>{"w", "v"});
  CHECK(code_of([&] { merge({a, a}); }) == ErrorCode::DuplicateResponse);
}

TEST_CASE("mutated inputs always end in a structured error or a valid dataset")
{
  auto const ds   = iaa::testing::clinic_dataset(8, 3);
  auto const csv  = serialize_csv(ds);
  auto const json = serialize_json(ds);

  std::mt19937_64 rng{99};
  std::string const alphabet = ",\"\n\r{}[]:.-e0123456789 \\\xff\xc3";
  for (int trial = 0; trial < 2000; ++trial)
  {
    bool const  use_csv = trial % 2 == 0;
    std::string input   = use_csv ? csv : json;
    int const   edits   = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < edits && !input.empty(); ++e)
    {
      std::size_t const pos = rng() % input.size();
      switch (rng() % 4)
      {
      case 0:
        input[pos] = alphabet[rng() % alphabet.size()];
        break;
      case 1:
        input.erase(pos, 1 + rng() % 8);
        break;
      case 2:
        input.insert(pos, 1, alphabet[rng() % alphabet.size()]);
        break;
      default:
        input.resize(pos);
      }
    }
    try
    {
      auto const parsed = parse_dataset(input, use_csv ? Format::Csv : Format::Json);
      CHECK(find_issues(parsed.grid(), parsed.words(), parsed.records()).empty());
    }
    catch (Error const &)
    {
    }
  }
}
