"""Inventory report."""
from dataclasses import dataclass


@dataclass
class Item:
    name: str
    qty: int = 0

    def restock(self, amount: int) -> None:
        # guard against negative input
        if amount < 0:
            raise ValueError("amount must be positive")
        self.qty += amount


def report(items):
    lines = []
    for item in items:
        status = "low" if item.qty < 5 else "ok"
        lines.append(f"{item.name}: {item.qty} ({status})")
    return "\n".join(lines)


if __name__ == "__main__":
    stock = [Item("bolt", 3), Item("nut", 12)]
    for s in stock: s.restock(1)
    print(report(stock))
