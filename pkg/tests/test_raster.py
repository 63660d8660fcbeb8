import numpy as np
import pytest

from canvas_access.raster import (
    GAUSSIAN_3X3,
    BoundsError,
    DecodeError,
    Kernel3x3,
    PixelBuffer,
    convolve3x3,
    decode_image,
    denoise,
    get_image_data,
    to_gray,
)
from canvas_access.edges import LOG_KERNEL

from conftest import encode_png_reference, make_gray, make_pixel_buffer


class TestDecodeImage:
    def test_single_white_pixel(self):
        rgba = np.full((1, 1, 4), 255, dtype=np.uint8)
        buf = decode_image(encode_png_reference(rgba))
        assert (buf.width, buf.height) == (1, 1)
        assert buf.data.tolist() == [255, 255, 255, 255]

    def test_round_trip_against_reference_codec(self):
        rng = np.random.default_rng(7)
        rgba = rng.integers(0, 256, size=(2, 2, 4), dtype=np.uint8)
        buf = decode_image(encode_png_reference(rgba))
        assert np.array_equal(buf.as_rgba(), rgba)

    def test_round_trip_larger_random(self):
        rng = np.random.default_rng(42)
        rgba = rng.integers(0, 256, size=(23, 31, 4), dtype=np.uint8)
        buf = decode_image(encode_png_reference(rgba))
        assert np.array_equal(buf.as_rgba(), rgba)

    def test_rgb_without_alpha_gets_opaque(self):
        import io
        from PIL import Image

        img = Image.new("RGB", (3, 2), (10, 20, 30))
        out = io.BytesIO()
        img.save(out, format="PNG")
        buf = decode_image(out.getvalue())
        assert np.all(buf.as_rgba()[:, :, 3] == 255)
        assert np.all(buf.as_rgba()[:, :, 0] == 10)

    def test_empty_input_is_decode_error(self):
        with pytest.raises(DecodeError):
            decode_image(b"")

    def test_truncated_stream_reports_offset(self):
        rgba = np.full((4, 4, 4), 128, dtype=np.uint8)
        data = encode_png_reference(rgba)
        with pytest.raises(DecodeError, match="byte offset"):
            decode_image(data[: len(data) // 2])

    def test_garbage_signature(self):
        with pytest.raises(DecodeError, match="offset 0"):
            decode_image(b"GIF89a" + b"\x00" * 64)


class TestGetImageData:
    def test_whole_buffer_identity(self):
        rng = np.random.default_rng(3)
        rgba = rng.integers(0, 256, size=(5, 7, 4), dtype=np.uint8)
        buf = make_pixel_buffer(rgba)
        copy = get_image_data(buf, 0, 0, buf.width, buf.height)
        assert np.array_equal(copy.as_rgba(), rgba)
        assert copy.data is not buf.data

    def test_interior_rectangle_row_major(self):
        # pixel (x, y) encoded as value y*4 + x in the red channel
        rgba = np.zeros((4, 4, 4), dtype=np.uint8)
        for y in range(4):
            for x in range(4):
                rgba[y, x] = (y * 4 + x, 0, 0, 255)
        buf = make_pixel_buffer(rgba)
        inner = get_image_data(buf, 1, 1, 2, 2)
        assert inner.as_rgba()[:, :, 0].ravel().tolist() == [5, 6, 9, 10]

    def test_off_by_one_overflow(self):
        buf = make_pixel_buffer(np.zeros((3, 3, 4), dtype=np.uint8))
        with pytest.raises(BoundsError):
            get_image_data(buf, buf.width - 1, 0, 2, 1)

    def test_source_unmodified(self):
        rgba = np.full((3, 3, 4), 9, dtype=np.uint8)
        buf = make_pixel_buffer(rgba)
        region = get_image_data(buf, 0, 0, 2, 2)
        region.as_rgba()[:] = 0
        assert np.all(buf.as_rgba() == 9)

    def test_full_tiling_reconstructs(self):
        rng = np.random.default_rng(11)
        rgba = rng.integers(0, 256, size=(6, 8, 4), dtype=np.uint8)
        buf = make_pixel_buffer(rgba)
        rebuilt = np.zeros_like(rgba)
        for y in range(0, 6, 2):
            for x in range(0, 8, 4):
                tile = get_image_data(buf, x, y, 4, 2)
                rebuilt[y : y + 2, x : x + 4] = tile.as_rgba()
        assert np.array_equal(rebuilt, rgba)


class TestToGray:
    def test_white_is_max(self):
        buf = make_pixel_buffer(np.full((2, 2, 4), 255, dtype=np.uint8))
        gray = to_gray(buf)
        assert gray.data == pytest.approx([255.0] * 4)

    def test_pure_red_luma(self):
        rgba = np.zeros((1, 1, 4), dtype=np.uint8)
        rgba[0, 0] = (255, 0, 0, 255)
        gray = to_gray(make_pixel_buffer(rgba))
        assert gray.data[0] == pytest.approx(0.299 * 255)

    def test_black_is_zero(self):
        rgba = np.zeros((2, 3, 4), dtype=np.uint8)
        rgba[:, :, 3] = 255
        gray = to_gray(make_pixel_buffer(rgba))
        assert np.all(gray.data == 0.0)


class TestDenoise:
    def test_constant_preserved_exactly(self):
        gray = make_gray(np.full((5, 5), 77.25))
        out = denoise(gray)
        assert np.all(out.data == 77.25)

    def test_impulse_response(self):
        grid = np.zeros((5, 5))
        grid[2, 2] = 16.0
        out = denoise(make_gray(grid)).as_array()
        assert out[2, 2] == 4.0
        for dy, dx in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            assert out[2 + dy, 2 + dx] == 2.0
        for dy, dx in ((-1, -1), (-1, 1), (1, -1), (1, 1)):
            assert out[2 + dy, 2 + dx] == 1.0

    def test_single_pixel_buffer(self):
        out = denoise(make_gray([[42.5]]))
        assert out.data.tolist() == [42.5]


class TestConvolve3x3:
    def test_zero_sum_kernel_on_constant_is_exact_zero(self):
        for value in (0.0, 1.0, 76.245, 200.125, 254.0):
            gray = make_gray(np.full((6, 6), value))
            out = convolve3x3(gray, LOG_KERNEL)
            assert np.all(out.data == 0.0), f"value {value}"

    def test_impulse_on_padded_grid(self):
        grid = np.zeros((5, 5))
        grid[2, 2] = 1.0
        out = convolve3x3(make_gray(grid), LOG_KERNEL).as_array()
        assert out[2, 2] == -8.0
        neighbors = [out[2 + dy, 2 + dx] for dy in (-1, 0, 1) for dx in (-1, 0, 1)
                     if (dy, dx) != (0, 0)]
        assert neighbors == [1.0] * 8

    def test_vertical_line_kernel_response(self):
        vertical = Kernel3x3((-1, 2, -1, -1, 2, -1, -1, 2, -1))
        grid = np.zeros((7, 7))
        grid[:, 3] = 1.0
        out = convolve3x3(make_gray(grid), vertical).as_array()
        assert np.all(out[:, 3] == 6.0)

    def test_linearity(self):
        rng = np.random.default_rng(5)
        a = rng.uniform(0, 255, size=(8, 8))
        b = rng.uniform(0, 255, size=(8, 8))
        kernel = LOG_KERNEL
        lhs = convolve3x3(make_gray(2.5 * a + 1.5 * b), kernel).as_array()
        rhs = 2.5 * convolve3x3(make_gray(a), kernel).as_array() + 1.5 * convolve3x3(
            make_gray(b), kernel
        ).as_array()
        assert np.allclose(lhs, rhs, atol=1e-9)

    def test_deterministic(self):
        rng = np.random.default_rng(9)
        grid = rng.uniform(0, 255, size=(16, 16))
        first = convolve3x3(make_gray(grid), GAUSSIAN_3X3).data
        second = convolve3x3(make_gray(grid), GAUSSIAN_3X3).data
        assert np.array_equal(first, second)

    def test_kernel_requires_nine_coefficients(self):
        with pytest.raises(ValueError):
            Kernel3x3((1, 2, 3))


class TestPixelBufferInvariants:
    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            PixelBuffer(2, 2, np.zeros(15, dtype=np.uint8))

    def test_zero_dimensions_rejected(self):
        with pytest.raises(ValueError):
            PixelBuffer(0, 1, np.zeros(0, dtype=np.uint8))
