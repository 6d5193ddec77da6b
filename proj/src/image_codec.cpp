// Copyright 2026 The waveliq authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <csetjmp>

#include <jpeglib.h>
#include <png.h>

#include "waveliq/errors.hpp"
#include "waveliq/image.hpp"
#include "waveliq/log.hpp"

namespace waveliq {

namespace {

constexpr double kScale8 = 255.0;
constexpr double kScale16 = 65535.0;

uint8_t quantize8(double v) {
    const double clamped = std::min(1.0, std::max(0.0, v));
    return static_cast<uint8_t>(std::lround(clamped * 255.0));
}

// ---------------------------------------------------------------- PNG --

struct PngReadState {
    const uint8_t* data;
    size_t size;
    size_t pos;
};

void png_mem_read(png_structp png, png_bytep out, png_size_t n) {
    auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
    if (st->pos + n > st->size) {
        png_error(png, "truncated PNG stream");
    }
    std::memcpy(out, st->data + st->pos, n);
    st->pos += n;
}

void png_mem_write(png_structp png, png_bytep data, png_size_t n) {
    auto* out = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + n);
}

void png_noop_flush(png_structp) {}

RasterImage decode_png(const std::vector<uint8_t>& bytes) {
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DecodeError("png: allocation failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("png: allocation failure");
    }

    std::vector<std::vector<uint8_t>> rows;
    PngReadState state{bytes.data(), bytes.size(), 0};

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("png: corrupt or truncated stream");
    }

    png_set_read_fn(png, &state, png_mem_read);
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (png_get_valid(png, info, PNG_INFO_tRNS)) {
        png_set_tRNS_to_alpha(png);
    }
    // 16-bit samples arrive big-endian from the stream.
    if (bit_depth == 16) {
        png_set_swap(png);
    }
    png_read_update_info(png, info);

    int channels = png_get_channels(png, info);
    const int depth = png_get_bit_depth(png, info);
    const size_t rowbytes = png_get_rowbytes(png, info);

    rows.assign(height, std::vector<uint8_t>(rowbytes));
    std::vector<png_bytep> row_ptrs(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        row_ptrs[y] = rows[y].data();
    }
    png_read_image(png, row_ptrs.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    bool has_alpha = (channels == 2 || channels == 4);
    if (has_alpha) {
        log::warn("png: alpha channel dropped");
    }
    const int out_channels = (channels <= 2) ? 1 : 3;
    if (width == 0 || height == 0) {
        throw DecodeError("png: empty image");
    }

    RasterImage img(static_cast<int>(width), static_cast<int>(height), out_channels);
    const double scale = (depth == 16) ? kScale16 : kScale8;
    for (png_uint_32 y = 0; y < height; ++y) {
        const uint8_t* row = rows[y].data();
        for (png_uint_32 x = 0; x < width; ++x) {
            for (int c = 0; c < out_channels; ++c) {
                const size_t s = (static_cast<size_t>(x) * channels + c);
                double v;
                if (depth == 16) {
                    uint16_t raw;
                    std::memcpy(&raw, row + 2 * s, 2);
                    v = raw / scale;
                } else {
                    v = row[s] / scale;
                }
                img.at(static_cast<int>(x), static_cast<int>(y), c) = v;
            }
        }
    }
    return img;
}

std::vector<uint8_t> encode_png(const RasterImage& img) {
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw DecodeError("png: allocation failure");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw DecodeError("png: allocation failure");
    }

    std::vector<uint8_t> out;
    std::vector<std::vector<uint8_t>> rows(img.height,
                                           std::vector<uint8_t>(static_cast<size_t>(img.width) * img.channels));
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            for (int c = 0; c < img.channels; ++c) {
                rows[y][static_cast<size_t>(x) * img.channels + c] = quantize8(img.at(x, y, c));
            }
        }
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw DecodeError("png: encode failure");
    }

    png_set_write_fn(png, &out, png_mem_write, png_noop_flush);
    const int color_type = (img.channels == 1) ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, info, img.width, img.height, 8, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> row_ptrs(img.height);
    for (int y = 0; y < img.height; ++y) {
        row_ptrs[y] = rows[y].data();
    }
    png_write_image(png, row_ptrs.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

// --------------------------------------------------------------- JPEG --

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    longjmp(err->jump, 1);
}

RasterImage decode_jpeg(const std::vector<uint8_t>& bytes) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;

    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError(std::string("jpeg: ") + jerr.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
    jpeg_read_header(&cinfo, TRUE);

    if (cinfo.jpeg_color_space == JCS_CMYK || cinfo.jpeg_color_space == JCS_YCCK) {
        jpeg_destroy_decompress(&cinfo);
        throw UnsupportedChannels("jpeg: CMYK inputs are not supported");
    }
    cinfo.out_color_space = (cinfo.num_components == 1) ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    const int width = static_cast<int>(cinfo.output_width);
    const int height = static_cast<int>(cinfo.output_height);
    const int channels = cinfo.output_components;
    if (channels != 1 && channels != 3) {
        jpeg_destroy_decompress(&cinfo);
        throw UnsupportedChannels("jpeg: unsupported component count " + std::to_string(channels));
    }

    RasterImage img(width, height, channels);
    std::vector<uint8_t> row(static_cast<size_t>(width) * channels);
    JSAMPROW rowp = row.data();
    while (cinfo.output_scanline < cinfo.output_height) {
        const int y = static_cast<int>(cinfo.output_scanline);
        jpeg_read_scanlines(&cinfo, &rowp, 1);
        for (int x = 0; x < width; ++x) {
            for (int c = 0; c < channels; ++c) {
                img.at(x, y, c) = row[static_cast<size_t>(x) * channels + c] / kScale8;
            }
        }
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return img;
}

// ---------------------------------------------------------------- BMP --

uint32_t read_u32le(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}
uint16_t read_u16le(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}
void push_u16le(std::vector<uint8_t>& v, uint16_t x) {
    v.push_back(static_cast<uint8_t>(x & 0xff));
    v.push_back(static_cast<uint8_t>(x >> 8));
}
void push_u32le(std::vector<uint8_t>& v, uint32_t x) {
    for (int i = 0; i < 4; ++i) v.push_back(static_cast<uint8_t>((x >> (8 * i)) & 0xff));
}

RasterImage decode_bmp(const std::vector<uint8_t>& bytes) {
    if (bytes.size() < 54) throw DecodeError("bmp: header truncated");
    const uint32_t data_offset = read_u32le(&bytes[10]);
    const uint32_t header_size = read_u32le(&bytes[14]);
    if (header_size < 40) throw DecodeError("bmp: unsupported header");
    const int32_t width = static_cast<int32_t>(read_u32le(&bytes[18]));
    const int32_t raw_height = static_cast<int32_t>(read_u32le(&bytes[22]));
    const uint16_t planes = read_u16le(&bytes[26]);
    const uint16_t bpp = read_u16le(&bytes[28]);
    const uint32_t compression = read_u32le(&bytes[30]);

    if (planes != 1 || compression != 0) {
        throw DecodeError("bmp: only uncompressed BI_RGB images are supported");
    }
    const bool top_down = raw_height < 0;
    const int height = top_down ? -raw_height : raw_height;
    if (width <= 0 || height <= 0) throw DecodeError("bmp: bad dimensions");
    if (bpp != 8 && bpp != 24 && bpp != 32) {
        throw UnsupportedChannels("bmp: unsupported bit depth " + std::to_string(bpp));
    }

    // 8-bit images carry a palette right after the info header.
    std::vector<std::array<uint8_t, 3>> palette;
    if (bpp == 8) {
        uint32_t entries = read_u32le(&bytes[46]);
        if (entries == 0) entries = 256;
        const size_t pal_off = 14 + header_size;
        if (pal_off + entries * 4 > bytes.size()) throw DecodeError("bmp: palette truncated");
        palette.resize(entries);
        for (uint32_t i = 0; i < entries; ++i) {
            const uint8_t* e = &bytes[pal_off + i * 4];
            palette[i] = {e[2], e[1], e[0]}; // stored BGRA
        }
    }
    const bool gray_palette =
        bpp == 8 && std::all_of(palette.begin(), palette.end(), [](const auto& e) {
            return e[0] == e[1] && e[1] == e[2];
        });

    if (bpp == 32) {
        log::warn("bmp: alpha channel dropped");
    }

    const size_t bytes_per_px = bpp / 8;
    const size_t stride = ((static_cast<size_t>(width) * bytes_per_px + 3) / 4) * 4;
    if (data_offset + stride * height > bytes.size()) {
        throw DecodeError("bmp: pixel data truncated");
    }

    const int out_channels = (bpp == 8 && gray_palette) ? 1 : 3;
    RasterImage img(width, height, out_channels);
    for (int y = 0; y < height; ++y) {
        const int src_row = top_down ? y : (height - 1 - y);
        const uint8_t* row = &bytes[data_offset + stride * src_row];
        for (int x = 0; x < width; ++x) {
            if (bpp == 8) {
                const uint8_t idx = row[x];
                if (idx >= palette.size()) throw DecodeError("bmp: palette index out of range");
                if (out_channels == 1) {
                    img.at(x, y, 0) = palette[idx][0] / kScale8;
                } else {
                    for (int c = 0; c < 3; ++c) img.at(x, y, c) = palette[idx][c] / kScale8;
                }
            } else {
                const uint8_t* px = row + x * bytes_per_px;
                img.at(x, y, 0) = px[2] / kScale8; // stored BGR(A)
                img.at(x, y, 1) = px[1] / kScale8;
                img.at(x, y, 2) = px[0] / kScale8;
            }
        }
    }
    return img;
}

std::vector<uint8_t> encode_bmp(const RasterImage& img) {
    const bool gray = img.channels == 1;
    const size_t bytes_per_px = gray ? 1 : 3;
    const size_t stride = ((static_cast<size_t>(img.width) * bytes_per_px + 3) / 4) * 4;
    const size_t palette_size = gray ? 256 * 4 : 0;
    const size_t data_offset = 14 + 40 + palette_size;
    const size_t file_size = data_offset + stride * img.height;

    std::vector<uint8_t> out;
    out.reserve(file_size);
    out.push_back('B');
    out.push_back('M');
    push_u32le(out, static_cast<uint32_t>(file_size));
    push_u32le(out, 0);
    push_u32le(out, static_cast<uint32_t>(data_offset));
    push_u32le(out, 40);
    push_u32le(out, static_cast<uint32_t>(img.width));
    push_u32le(out, static_cast<uint32_t>(img.height)); // bottom-up
    push_u16le(out, 1);
    push_u16le(out, gray ? 8 : 24);
    push_u32le(out, 0); // BI_RGB
    push_u32le(out, static_cast<uint32_t>(stride * img.height));
    push_u32le(out, 2835);
    push_u32le(out, 2835);
    push_u32le(out, gray ? 256 : 0);
    push_u32le(out, 0);
    if (gray) {
        for (int i = 0; i < 256; ++i) {
            out.push_back(static_cast<uint8_t>(i));
            out.push_back(static_cast<uint8_t>(i));
            out.push_back(static_cast<uint8_t>(i));
            out.push_back(0);
        }
    }
    for (int y = img.height - 1; y >= 0; --y) {
        const size_t row_start = out.size();
        for (int x = 0; x < img.width; ++x) {
            if (gray) {
                out.push_back(quantize8(img.at(x, y, 0)));
            } else {
                out.push_back(quantize8(img.at(x, y, 2)));
                out.push_back(quantize8(img.at(x, y, 1)));
                out.push_back(quantize8(img.at(x, y, 0)));
            }
        }
        while (out.size() - row_start < stride) out.push_back(0);
    }
    return out;
}

} // namespace

RasterImage decode_image(const std::vector<uint8_t>& bytes) {
    if (bytes.size() >= 8 && bytes[0] == 0x89 && bytes[1] == 'P' && bytes[2] == 'N' &&
        bytes[3] == 'G') {
        return decode_png(bytes);
    }
    if (bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 && bytes[2] == 0xff) {
        return decode_jpeg(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
        return decode_bmp(bytes);
    }
    throw DecodeError("unrecognized image format (expected PNG, BMP, or JPEG)");
}

std::vector<uint8_t> encode_image(const RasterImage& img, ImageFormat fmt) {
    if (img.channels != 1 && img.channels != 3) {
        throw UnsupportedChannels("encode: expected 1 or 3 channels, got " +
                                  std::to_string(img.channels));
    }
    if (img.width <= 0 || img.height <= 0) {
        throw DecodeError("encode: empty image");
    }
    switch (fmt) {
    case ImageFormat::Png: return encode_png(img);
    case ImageFormat::Bmp: return encode_bmp(img);
    case ImageFormat::Jpeg:
        throw DecodeError("encode: JPEG output is not supported");
    }
    throw DecodeError("encode: unknown format");
}

} // namespace waveliq
