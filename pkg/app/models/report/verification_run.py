from datetime import datetime, timezone

from ...database import db


class VerificationRun(db.Model):
    __tablename__ = "verification_run"

    id = db.Column(db.Integer, primary_key=True)
    digits = db.Column(db.Integer, nullable=False)
    guard = db.Column(db.Integer, nullable=False)
    tool_version = db.Column(db.String(20), nullable=False)
    catalog_hash = db.Column(db.String(64), nullable=False)
    trigger = db.Column(db.String(20), nullable=False, default="manual")
    passed = db.Column(db.Integer, nullable=False, default=0)
    total = db.Column(db.Integer, nullable=False, default=0)
    created_at = db.Column(
        db.DateTime, nullable=False, default=lambda: datetime.now(timezone.utc)
    )

    records = db.relationship(
        "VerificationRecord",
        back_populates="run",
        order_by="VerificationRecord.position",
        cascade="all, delete-orphan",
    )

    def to_dict(self, with_records=False):
        data = {
            "id": self.id,
            "digits": self.digits,
            "guard": self.guard,
            "tool_version": self.tool_version,
            "catalog_hash": self.catalog_hash,
            "trigger": self.trigger,
            "passed": self.passed,
            "total": self.total,
            "created_at": self.created_at,
        }
        if with_records:
            data["records"] = [record.to_dict() for record in self.records]
        return data


class VerificationRecord(db.Model):
    __tablename__ = "verification_record"

    id = db.Column(db.Integer, primary_key=True)
    run_id = db.Column(db.Integer, db.ForeignKey("verification_run.id"), nullable=False)
    position = db.Column(db.Integer, nullable=False)
    identity_id = db.Column(db.String(40), nullable=False)
    status = db.Column(db.String(10), nullable=False)
    lhs_value = db.Column(db.Text, nullable=False)
    rhs_value = db.Column(db.Text, nullable=False)
    abs_diff = db.Column(db.Text, nullable=False)
    digits_agreed = db.Column(db.Float, nullable=False)
    precision_used = db.Column(db.Integer, nullable=False)
    elapsed_ms = db.Column(db.Integer, nullable=False)
    anchor = db.Column(db.String(120), nullable=False)
    min_digits = db.Column(db.Integer, nullable=False)
    message = db.Column(db.Text, nullable=False, default="")

    run = db.relationship("VerificationRun", back_populates="records")

    def to_dict(self):
        return {
            "id": self.identity_id,
            "status": self.status,
            "lhs_value": self.lhs_value,
            "rhs_value": self.rhs_value,
            "abs_diff": self.abs_diff,
            "digits_agreed": self.digits_agreed,
            "precision_used": self.precision_used,
            "elapsed_ms": self.elapsed_ms,
            "anchor": self.anchor,
            "min_digits": self.min_digits,
            "message": self.message,
        }
