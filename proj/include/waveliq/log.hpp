// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace waveliq::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Current threshold, initialized once from the WAVELIQ_LOG environment
/// variable (error|warn|info|debug, default warn).
Level threshold();

void set_threshold(Level lvl);

void emit(Level lvl, const std::string& msg);

inline void error(const std::string& msg) { emit(Level::Error, msg); }
inline void warn(const std::string& msg) { emit(Level::Warn, msg); }
inline void info(const std::string& msg) { emit(Level::Info, msg); }
inline void debug(const std::string& msg) { emit(Level::Debug, msg); }

} // namespace waveliq::log
