// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace waveliq {

/// Base class for all waveliq errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Image decoding / encoding.
class DecodeError : public Error {
public:
    using Error::Error;
};
class UnsupportedChannels : public Error {
public:
    using Error::Error;
};
class IoError : public Error {
public:
    using Error::Error;
};

// Manifest ingestion.
class ParseError : public Error {
public:
    using Error::Error;
};
class DuplicateId : public Error {
public:
    using Error::Error;
};

// Pair validation.
class GeometryMismatch : public Error {
public:
    using Error::Error;
};

// Wavelet decomposition.
class ImageTooSmall : public Error {
public:
    using Error::Error;
};
class GridTooSmall : public Error {
public:
    using Error::Error;
};

// Feature refinement.
class ConfigMismatch : public Error {
public:
    using Error::Error;
};

// Set distances.
class DimMismatch : public Error {
public:
    using Error::Error;
};
class EmptySet : public Error {
public:
    using Error::Error;
};
class CouplingUnavailable : public Error {
public:
    using Error::Error;
};
class InvalidDistance : public Error {
public:
    using Error::Error;
};

// Feature tensor files.
class FormatError : public Error {
public:
    using Error::Error;
};

// Histograms.
class BadBinCount : public Error {
public:
    using Error::Error;
};
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// Statistics.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

} // namespace waveliq
