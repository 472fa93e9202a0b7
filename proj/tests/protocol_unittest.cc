#include "accelkey/protocol.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace accelkey {
namespace {

using nlohmann::json;

DatasetCatalog Catalog() {
  DatasetCatalog catalog;
  catalog.AddDataset("writers",
                     {"Orwell", "Joyce", "T.S., Eliot", "Tolkien", "Adams"});
  return catalog;
}

json Hello() { return {{"type", "hello"}, {"dataset", "writers"}}; }

json Event(const std::string& name) {
  return {{"type", "event"}, {"event", name}};
}

TEST(DatasetCatalogTest, SortsDatasetsAndKnowsBuiltinLayouts) {
  const DatasetCatalog catalog = Catalog();
  EXPECT_EQ(*catalog.FindDataset("writers"),
            (std::vector<std::string>{"Adams", "Joyce", "Orwell",
                                      "T.S., Eliot", "Tolkien"}));
  EXPECT_EQ(catalog.LayoutNames(), (std::vector<std::string>{"abc", "qwerty"}));
  EXPECT_EQ(catalog.FindDataset("nope"), nullptr);
}

TEST(ProtocolTest, HelloReturnsInitialSnapshot) {
  const DatasetCatalog catalog = Catalog();
  ProtocolSession protocol(catalog);
  const json state = protocol.Handle(Hello());
  EXPECT_EQ(state["type"], "state");
  EXPECT_EQ(state["mode"], "selection");
  EXPECT_EQ(state["prefix"], json::array());
  EXPECT_EQ(state["entries"].size(), 5u);
  EXPECT_EQ(state["entries"][0],
            (json{{"index", 0}, {"text", "Adams"}, {"highlight", json::array()}}));
  EXPECT_TRUE(state["cursor"].is_null());
  EXPECT_EQ(state["layout"]["name"], "qwerty");
  EXPECT_EQ(state["layout"]["right"], (json{"H", "J", "K", "L"}));
  EXPECT_EQ(state["viable"]["up"], (json{"T", "O"}));
  EXPECT_EQ(state["viable"]["down"], json::array());
  EXPECT_EQ(state["total"], 5);
}

TEST(ProtocolTest, TsEliotScript) {
  const DatasetCatalog catalog = Catalog();
  ProtocolSession protocol(catalog);
  protocol.Handle(Hello());
  protocol.Handle(Event("up"));
  const json state = protocol.Handle(Event("left"));
  ASSERT_EQ(state["type"], "state");
  ASSERT_EQ(state["entries"].size(), 1u);
  EXPECT_EQ(state["entries"][0]["text"], "T.S., Eliot");
  EXPECT_EQ(state["entries"][0]["highlight"], (json{0, 2}));
  EXPECT_EQ(state["prefix"],
            (json{{{"kind", "direction"}, {"value", "up"}},
                  {{"kind", "direction"}, {"value", "left"}}}));
  // Only E can follow S in the remaining entry.
  EXPECT_EQ(state["viable"]["up"], (json{"E"}));
  for (const char* direction : {"down", "left", "right"}) {
    EXPECT_EQ(state["viable"][direction], json::array()) << direction;
  }
  EXPECT_EQ(protocol.Handle(Event("select")),
            (json{{"type", "selected"}, {"index", 3}, {"text", "T.S., Eliot"}}));
}

TEST(ProtocolTest, InlineEntriesOptionsAndCursor) {
  const DatasetCatalog catalog = Catalog();
  ProtocolSession protocol(catalog);
  const json hello = {
      {"type", "hello"},
      {"entries", {"Smith, John", "Blake, John", "Updike, John"}},
      {"layout", "abc"},
      {"options", {{"span_words", true}, {"wrap", true}, {"word_mode", true},
                   {"cursor", "middle"}}}};
  EXPECT_EQ(protocol.Handle(hello)["entries"][0]["text"], "Smith, John");
  for (const char* letter : {"j", "o", "h", "n"}) {
    protocol.Handle({{"type", "event"}, {"event", "literal"},
                     {"letter", letter}});
  }
  const json scrolling = protocol.Handle(Event("select"));
  EXPECT_EQ(scrolling["mode"], "scrolling");
  EXPECT_EQ(scrolling["cursor"], 1);
  const json state = protocol.Handle(
      {{"type", "event"}, {"event", "literal"}, {"letter", "s"}});
  ASSERT_EQ(state["entries"].size(), 1u);
  EXPECT_EQ(state["entries"][0]["highlight"], (json{7, 8, 9, 10, 0}));
}

TEST(ProtocolTest, KeypadEvents) {
  const DatasetCatalog catalog = Catalog();
  ProtocolSession protocol(catalog);
  protocol.Handle(Hello());
  const json state =
      protocol.Handle({{"type", "event"}, {"event", "keypad"}, {"key", "8"}});
  EXPECT_EQ(state["entries"].size(), 2u);  // T.S., Eliot and Tolkien
  EXPECT_EQ(state["prefix"][0], (json{{"kind", "keypad"}, {"value", "8"}}));
  EXPECT_EQ(protocol.Handle(
                {{"type", "event"}, {"event", "keypad"}, {"key", "1"}})["type"],
            "error");
}

TEST(ProtocolTest, RejectionAndTrackball) {
  const DatasetCatalog catalog = Catalog();
  ProtocolSession protocol(catalog);
  const json initial = protocol.Handle(Hello());
  EXPECT_EQ(protocol.Handle(Event("down")),
            (json{{"type", "rejected"}, {"reason", "dead end"}}));
  EXPECT_EQ(protocol.Handle({{"type", "trackball"}, {"dx", 0}, {"dy", 0}}),
            initial);
  EXPECT_EQ(protocol.Handle({{"type", "trackball"}, {"dx", 1}, {"dy", -1}}),
            initial);
  const json right =
      protocol.Handle({{"type", "trackball"}, {"dx", 8}, {"dy", 1}});
  EXPECT_EQ(right["prefix"][0]["value"], "right");
}

TEST(ProtocolTest, MalformedMessagesLeaveSessionUnchanged) {
  const DatasetCatalog catalog = Catalog();
  ProtocolSession protocol(catalog);
  EXPECT_EQ(json::parse(protocol.HandleText("{not json"))["type"], "error");
  EXPECT_EQ(protocol.Handle(Event("up"))["type"], "error");  // before hello
  EXPECT_EQ(protocol.Handle({{"type", "hello"}, {"dataset", "nope"}})["type"],
            "error");
  const json initial = protocol.Handle(Hello());
  protocol.Handle(Event("up"));
  const json after_up = SnapshotJson(*protocol.session());
  for (const json& bad : {json::array(), json{{"type", 3}},
                          json{{"type", "dance"}}, Event("sideways"),
                          json{{"type", "event"}},
                          json{{"type", "trackball"}, {"dx", "x"}},
                          json{{"type", "event"}, {"event", "literal"},
                               {"letter", "."}},
                          json{{"type", "event"}, {"event", "literal"},
                               {"letter", "ab"}},
                          json{{"type", "hello"}, {"dataset", "writers"},
                               {"options", {{"wrap", "yes"}}}},
                          json{{"type", "hello"}, {"dataset", "writers"},
                               {"layout", "dvorak"}}}) {
    const json reply = protocol.Handle(bad);
    EXPECT_EQ(reply["type"], "error") << bad.dump();
    EXPECT_TRUE(reply["message"].is_string());
    EXPECT_EQ(SnapshotJson(*protocol.session()), after_up) << bad.dump();
  }
  EXPECT_NE(initial, after_up);
}

// Replies equal what driving the session directly produces.
TEST(ProtocolTest, EquivalentToDrivingTheSession) {
  const DatasetCatalog catalog = Catalog();
  const std::vector<std::string> names = {"up",     "down",      "left",
                                          "right",  "select",    "backspace",
                                          "reset"};
  oracle::Generator gen(77);
  for (int round = 0; round < 100; ++round) {
    ProtocolSession protocol(catalog);
    protocol.Handle(Hello());
    Session direct = Session::Create(*catalog.FindDataset("writers"),
                                     Layout::Builtin("qwerty"));
    for (int step = 0; step < 25; ++step) {
      json message;
      InputEvent event;
      if (gen.Uniform(0, 4) == 0) {
        const double dx = static_cast<double>(gen.Uniform(0, 12)) - 6;
        const double dy = static_cast<double>(gen.Uniform(0, 12)) - 6;
        message = {{"type", "trackball"}, {"dx", dx}, {"dy", dy}};
        const auto direction = TrackballToDirection({dx, dy});
        if (!direction) {
          EXPECT_EQ(protocol.Handle(message), SnapshotJson(direct));
          continue;
        }
        event = DirectionalEvent{*direction};
      } else {
        const std::string& name = names[gen.Uniform(0, names.size() - 1)];
        message = Event(name);
        if (auto d = ParseDirection(name)) {
          event = DirectionalEvent{*d};
        } else if (name == "select") {
          event = SelectEvent{};
        } else if (name == "backspace") {
          event = BackspaceEvent{};
        } else {
          event = ResetEvent{};
        }
      }
      const json reply = protocol.Handle(message);
      const Outcome outcome = direct.Apply(event);
      switch (outcome.kind) {
        case Outcome::Kind::kContinue:
          ASSERT_EQ(reply, SnapshotJson(direct));
          break;
        case Outcome::Kind::kSelected:
          ASSERT_EQ(reply["type"], "selected");
          ASSERT_EQ(reply["index"], outcome.entry_index);
          break;
        case Outcome::Kind::kRejected:
          ASSERT_EQ(reply["type"], "rejected");
          break;
      }
    }
  }
}

}  // namespace
}  // namespace accelkey
