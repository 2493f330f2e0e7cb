"""
Tests del ByteStore: tamaños, asignación, lectura/escritura y volcado.
"""

import pytest
from hypothesis import given, strategies as st

from src.errors import AlreadyDefined, TypeMismatch, UndefinedVariable
from src.store import ByteStore, allocate_new, init, read, render_store, size, write
from src.syntax.types import UINT256_MAX, U64_MAX, TypeName, TypedValue

def test_sizes():
    assert size(TypeName.UINT256) == 32
    assert size(TypeName.BOOL) == 1
    assert size(TypeName.ADDRESS) == 16

def test_initial_values():
    assert init(TypeName.UINT256) == TypedValue.uint(0)
    assert init(TypeName.BOOL) == TypedValue.boolean(False)
    assert init(TypeName.ADDRESS) == TypedValue.address(0, 0)

def test_bump_allocation():
    store = allocate_new(TypeName.UINT256, ByteStore(), "balance")
    assert store.names["balance"] == 0
    assert store.next_free == 32
    store = allocate_new(TypeName.BOOL, store, "flag")
    assert store.names["flag"] == 32
    assert store.next_free == 33

def test_allocate_new_does_not_mutate_input():
    empty = ByteStore()
    allocate_new(TypeName.UINT256, empty, "x")
    assert empty.is_empty()

def test_allocate_twice_fails():
    store = allocate_new(TypeName.UINT256, ByteStore(), "x")
    with pytest.raises(AlreadyDefined):
        allocate_new(TypeName.BOOL, store, "x")

def test_read_write():
    store = allocate_new(TypeName.UINT256, ByteStore(), "x")
    assert read(store, "x") == TypedValue.uint(0)
    store = write(store, "x", TypedValue.uint(42))
    assert read(store, "x") == TypedValue.uint(42)

def test_read_undefined():
    with pytest.raises(UndefinedVariable):
        read(ByteStore(), "x")

def test_write_wrong_type():
    store = allocate_new(TypeName.UINT256, ByteStore(), "x")
    with pytest.raises(TypeMismatch):
        write(store, "x", TypedValue.boolean(True))

def test_write_back_to_zero_is_canonical():
    base = allocate_new(TypeName.UINT256, ByteStore(), "x")
    touched = write(write(base, "x", TypedValue.uint(7)), "x", TypedValue.uint(0))
    assert touched == base
    assert touched.cells == {}

def test_forget_releases_names_but_keeps_offsets():
    store = allocate_new(TypeName.UINT256, ByteStore(), "a")
    store = allocate_new(TypeName.UINT256, store, "b")
    store.forget(["a"])
    assert "a" not in store
    assert store.next_free == 64
    assert store.allocate(TypeName.BOOL, "c") == 64

def test_render_store_dump():
    store = allocate_new(TypeName.BOOL, ByteStore(), "flag")
    store = write(store, "flag", TypedValue.boolean(True))
    store = allocate_new(TypeName.ADDRESS, store, "who")
    store = write(store, "who", TypedValue.address(2, 1))
    text = render_store(store, "demo")
    assert "# demo" in text
    assert "flag : bool @ 0 = 01" in text
    assert "who : address @ 1 = 00000000000000020000000000000001" in text

values_by_type = {
    TypeName.UINT256: st.integers(0, UINT256_MAX).map(TypedValue.uint),
    TypeName.BOOL: st.booleans().map(TypedValue.boolean),
    TypeName.ADDRESS: st.tuples(st.integers(0, U64_MAX), st.integers(0, U64_MAX)).map(
        lambda p: TypedValue.address(*p)),
}

typed_values = st.one_of(*values_by_type.values())

@st.composite
def populated_stores(draw):
    names = draw(st.lists(st.sampled_from("abcdefgh"), min_size=2, max_size=8, unique=True))
    store = ByteStore()
    for name in names:
        value = draw(typed_values)
        store = write(allocate_new(value.type_name, store, name), name, value)
    return store, names

@given(populated_stores(), st.data())
def test_frame_property(populated, data):
    store, names = populated
    target, other = data.draw(st.sampled_from(names)), data.draw(st.sampled_from(names))
    value = data.draw(values_by_type[store.type_of(target)])
    updated = write(store, target, value)
    assert read(updated, target) == value
    if other != target:
        assert read(updated, other) == read(store, other)

@given(populated_stores())
def test_allocations_are_disjoint(populated):
    store, names = populated
    regions = sorted((store.names[n], store.names[n] + size(store.type_of(n))) for n in names)
    for (_, end), (start, _) in zip(regions, regions[1:]):
        assert end <= start
    assert regions[-1][1] == store.next_free
