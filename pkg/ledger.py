import json
import logging
from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, Integer, String, Text, create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from config import DATABASE_URL

logger = logging.getLogger('ledger')

Base = declarative_base()


class ComputationRecord(Base):
    """One CLI command and its JSON result"""
    __tablename__ = 'computations'

    id = Column(Integer, primary_key=True)
    command = Column(String(50), nullable=False, index=True)
    space = Column(String(255), nullable=False, index=True)
    perversity = Column(String(100), nullable=True)
    exit_code = Column(Integer, default=0)
    exact = Column(Boolean, default=True)
    result = Column(Text)  # JSON document as printed by the CLI
    recorded_at = Column(DateTime, default=datetime.now, index=True)

    def __repr__(self):
        return f"<ComputationRecord(command='{self.command}', space='{self.space}')>"


class LedgerManager:
    """Stores computation results; failures are logged and never raised"""

    def __init__(self, database_url=None):
        self.database_url = database_url or DATABASE_URL
        self.Session = None
        try:
            engine = create_engine(self.database_url)
            Base.metadata.create_all(engine)
            self.Session = sessionmaker(bind=engine)
            logger.info(f"Ledger ready at {self.database_url}")
        except Exception as e:
            logger.error(f"Failed to initialize ledger: {str(e)}")

    def record(self, command, space, result, perversity=None, exit_code=0, exact=True):
        """Record a computation result"""
        if self.Session is None:
            return False
        session = self.Session()
        try:
            session.add(ComputationRecord(
                command=command,
                space=space,
                perversity=perversity,
                exit_code=exit_code,
                exact=exact,
                result=json.dumps(result, sort_keys=True),
                recorded_at=datetime.now()
            ))
            session.commit()
            logger.debug(f"Recorded {command} on {space}")
            return True

        except Exception as e:
            session.rollback()
            logger.error(f"Error recording computation: {str(e)}")
            return False

        finally:
            session.close()

    def recent(self, limit=20, command=None):
        """Most recent records as plain dicts, newest first"""
        if self.Session is None:
            return []
        session = self.Session()
        try:
            query = session.query(ComputationRecord)
            if command:
                query = query.filter_by(command=command)
            rows = query.order_by(ComputationRecord.id.desc()).limit(limit).all()
            return [
                {
                    "id": row.id,
                    "command": row.command,
                    "space": row.space,
                    "perversity": row.perversity,
                    "exit_code": row.exit_code,
                    "exact": row.exact,
                    "result": json.loads(row.result) if row.result else None,
                    "recorded_at": row.recorded_at.isoformat() if row.recorded_at else None,
                }
                for row in rows
            ]
        except Exception as e:
            logger.error(f"Error reading ledger: {str(e)}")
            return []
        finally:
            session.close()
