#ifndef ACCELKEY_PROTOCOL_H_
#define ACCELKEY_PROTOCOL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "accelkey/adapters.h"
#include "accelkey/layout.h"
#include "accelkey/session.h"
#include "json.hpp"

namespace accelkey {

// Datasets and layouts a demo server offers to its clients.
class DatasetCatalog {
 public:
  DatasetCatalog();

  // Entries are sorted case-insensitively so scrolling direction is obvious.
  void AddDataset(std::string name, std::vector<std::string> entries);
  void AddLayout(Layout layout);

  const std::vector<std::string>* FindDataset(std::string_view name) const;
  const Layout* FindLayout(std::string_view name) const;

  std::vector<std::string> DatasetNames() const;
  std::vector<std::string> LayoutNames() const;

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> datasets_;
  std::map<std::string, Layout, std::less<>> layouts_;
};

// Complete state snapshot for a session (a "state" message).
nlohmann::json SnapshotJson(const Session& session);

// One connection's protocol state. Every message gets exactly one reply;
// malformed messages get an "error" reply and leave the session unchanged.
class ProtocolSession {
 public:
  explicit ProtocolSession(const DatasetCatalog& catalog,
                           JitterConfig jitter = {});

  nlohmann::json Handle(const nlohmann::json& message);
  std::string HandleText(std::string_view text);

  const std::optional<Session>& session() const { return session_; }

 private:
  nlohmann::json Hello(const nlohmann::json& message);
  nlohmann::json ApplyEvent(const InputEvent& event);
  InputEvent DecodeEvent(const nlohmann::json& message) const;

  const DatasetCatalog& catalog_;
  JitterConfig jitter_;
  std::optional<Session> session_;
};

nlohmann::json ErrorMessage(std::string_view message);

}  // namespace accelkey

#endif  // ACCELKEY_PROTOCOL_H_
