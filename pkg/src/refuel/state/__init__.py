"""File persistence for instances, manifests and orders."""

from refuel.state.instance_store import (
    MANIFEST_HEADER,
    InstanceStore,
    instance_from_dict,
    instance_to_dict,
    parse_order,
    read_manifest,
    read_order_file,
    write_manifest,
)

__all__ = [
    "MANIFEST_HEADER",
    "InstanceStore",
    "instance_from_dict",
    "instance_to_dict",
    "parse_order",
    "read_manifest",
    "read_order_file",
    "write_manifest",
]
