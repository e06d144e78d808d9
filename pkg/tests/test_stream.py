import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hammingcode import CodeParams, FormatError, Status, decode_stream, derive_params, encode, encode_stream
from hammingcode.stream import HEADER_SIZE, FrameHeader, pack_stream, unpack_stream


def expected_size(length, params):
    blocks = -(-8 * length // params.m)
    return HEADER_SIZE + -(-blocks * params.n // 8)


def flip_bit(coded, bit_index):
    out = bytearray(coded)
    out[HEADER_SIZE + bit_index // 8] ^= 0x80 >> (bit_index % 8)
    return bytes(out)


def test_golden_b0(golden, h74):
    assert encode_stream(b"\xb0", h74) == (golden / "b0_m4.hmg").read_bytes()


def test_b0_blocks(h74):
    header, words = unpack_stream(encode_stream(b"\xb0", h74))
    assert header.payload_bit_length == 8 and header.block_count == 2
    assert [str(encode(d, h74)) for d in ("1011", "0000")] == ["".join(map(str, w)) for w in words]


def test_empty_payload(h74):
    coded = encode_stream(b"", h74)
    assert len(coded) == HEADER_SIZE
    assert FrameHeader.unpack(coded).payload_bit_length == 0
    payload, report = decode_stream(coded)
    assert payload == b"" and report.block_count == 0


def test_header_layout():
    raw = FrameHeader(300, 9, 16).pack()
    assert raw == b"HMNG\x01" + (300).to_bytes(2, "little") + b"\x09" + (16).to_bytes(8, "little")


@given(st.binary(max_size=300), st.sampled_from([1, 3, 4, 8, 11, 26, 57]))
@settings(max_examples=150)
def test_round_trip_and_size(payload, m):
    params = derive_params(m)
    coded = encode_stream(payload, params)
    assert len(coded) == expected_size(len(payload), params)
    out, report = decode_stream(coded)
    assert out == payload
    assert report.corrected_count == 0 and not report.degraded


@given(st.binary(min_size=1, max_size=64), st.integers(0, 2**32))
def test_one_flip_per_block_is_repaired(payload, seed):
    params = CodeParams(4, 3)
    coded = encode_stream(payload, params)
    blocks = FrameHeader.unpack(coded).block_count
    rng = np.random.default_rng(seed)
    for b in range(blocks):
        coded = flip_bit(coded, b * params.n + int(rng.integers(params.n)))
    out, report = decode_stream(coded)
    assert out == payload
    assert report.corrected_count == blocks


def test_report_names_corrected_position(golden):
    payload, report = decode_stream((golden / "b0_m4_flip0_5.hmg").read_bytes())
    assert payload == b"\xb0"
    assert list(report.events()) == [(0, Status.CORRECTED, 5)]
    assert report.summary() == "2 blocks, 1 corrected, 0 uncorrectable"


def test_padding_corruption_ignored(h74):
    coded = encode_stream(b"\xb0", h74)
    # bits 14 and 15 of the body are padding
    assert decode_stream(flip_bit(flip_bit(coded, 14), 15))[0] == b"\xb0"


def test_uncorrectable_block_is_reported():
    params = CodeParams(3, 3)
    coded = encode_stream(b"\x00", params)
    coded = flip_bit(flip_bit(coded, 0), 5)  # block 0 positions 1 and 6
    payload, report = decode_stream(coded)
    assert report.degraded and report.uncorrectable_blocks.tolist() == [0]
    assert report.status(0) is Status.UNCORRECTABLE
    assert len(payload) == 1


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda c: b"XXXX" + c[4:], "magic"),
        (lambda c: c[:4] + b"\x02" + c[5:], "version"),
        (lambda c: c[:-1], "truncated"),
        (lambda c: c[:10], "truncated"),
        (lambda c: c + b"\x00", "trailing"),
        (lambda c: c[:8] + (9).to_bytes(8, "little") + c[16:], "whole number"),
        (lambda c: c[:5] + (5).to_bytes(2, "little") + c[7:], "invalid code parameters"),
    ],
)
def test_format_errors(h74, mutate, message):
    with pytest.raises(FormatError, match=message):
        decode_stream(mutate(encode_stream(b"\xb0\x01\x02", h74)))


def test_pack_unpack_inverse(h74):
    coded = encode_stream(bytes(range(40)), h74)
    header, words = unpack_stream(coded)
    assert pack_stream(header, words) == coded
