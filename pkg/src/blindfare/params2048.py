"""Committed production group: a 2048-bit Schnorr group with 256-bit q.

Generated once by scripts/gen_group.py from a fixed seed; the constants
below are data, not code.  Use default_group() to obtain the validated
GroupParams.
"""

from functools import lru_cache

from .groups import GroupParams, make_group

P_2048 = 0x9ab1b829d76667df24ca63e78e4c03da81d185972536045d622e010fe25df8600faa9e76868ceebe44d4b3b8f458a612a1b00cee8713948ea203cd1e386f79489cdc632cee405c9a15701c6974591be2f53b36d4a86d966123926b13d65bf420c6b451a0eff93fd96dca07d4d834c1746d6b266d139017989c2a76ed15b3249f38c07026ffbd42804d8d378af5ce4009d70e3261e10e20227c554a911c86725a5dd65e8cf75ce0c98674a4ae188b0907e71d3619badda8c9319effc98457d9246797406ef00dc19eeea47e6ec3022e31ac56daa0dd4563813385f8e721a95eca03c0597dd3b286cb3d1ad0fcb07bc2a76afccd50e145dad16e8adfb6e030a645

Q_2048 = 0xf31a2e532c5be20ea66ca155719a63998fe54fa66422fd07215f9897d20afde7

G_2048 = 0x201e9f81e298a2f92a5e0c44b786e89c230b45746d3d15f05ea2dd49f4f5d7f06a3b84301aac6687e6bcd04c90424591ec1b3b209d4351f55493008467948377b2a14a72a9511becf82942e434d7e454069aa51881f38d0b8fcdcc311cdae64e9a8a8193b30faebe485a2738c90d0c39a8dcd60bc76320f5c28689a98055debae3d85642bd354a4f4e31081f48d2959cb6d94718d0797c4a396b810857ec83c10f76abc4d3be381b9cf47f8abb5867ec0526a0322ee6d294a15302246a083f55275c139881a592df5dd3b9be6afc548339c116752899403ffacec44d729a78ae081a0bda83e811f85066e25ca7d33022189ea05113d282106edfe08819f1ec01


@lru_cache(maxsize=1)
def default_group() -> GroupParams:
    return make_group(P_2048, Q_2048, G_2048)
