//------------------------------------------------------------------------------
//
//   Copyright 2026 The IAA Toolkit Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------
#pragma once

#include "iaa/cli/store.hpp"

#include <memory>
#include <string>

namespace iaa::cli {

/// Local HTTP service for the capture form.
///
///   GET  /api/survey     survey definition: {"scale": {...}, "words": [...]}
///   POST /api/responses  one participant's response set (see parse_submission)
///   GET  /api/export     accumulated responses in the ingest JSON schema
///   GET  /               capture UI static assets, when an asset directory
///                        is configured
///
/// Rejected submissions get a 4xx reply {"error": <rule>, "message": ...};
/// 400 for malformed or invalid data, 409 for duplicates, 500 when the log
/// cannot be written.
class CaptureServer
{
public:
  CaptureServer(ResponseStore &store, std::string assets_dir = {});
  ~CaptureServer();

  CaptureServer(CaptureServer const &)            = delete;
  CaptureServer &operator=(CaptureServer const &) = delete;

  /// Binds to host:port (port 0 picks a free port) and returns the port.
  /// Throws Io when binding fails.
  int bind(std::string const &host, int port);

  /// Serves until stop() is called. Call after bind().
  void run();

  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace iaa::cli
