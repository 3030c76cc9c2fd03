/**
 * Tracks relationship change masks for cached graph nodes.
 */
class NodeRelationshipCache
{
    private long denseBits = 1;

    private long sparseBits = 2;

    private long scanSegmentAt1( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probeFrameAt2( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long storeCursorAt3( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probeRecordAt4( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateBatchAt5( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long countSegmentAt6( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateWindowAt7( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long storeLaneAt8( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long sampleSegmentAt9( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long alignLaneAt10( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanBatchAt11( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanCursorAt12( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long indexTrackAt13( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long indexBucketAt14( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probeTrackAt15( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitCursorAt16( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long storeWindowAt17( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long sampleRecordAt18( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long trimSlotAt19( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateLaneAt20( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probeNodeAt21( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long markNodeAt22( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanSegmentAt23( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateLaneAt24( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long loadBucketAt25( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanTrackAt26( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long flushFrameAt27( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitTrackAt28( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long sampleNodeAt29( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long alignTrackAt30( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long mergeWindowAt31( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long trimNodeAt32( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long countTrackAt33( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long flushShardAt34( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long loadLaneAt35( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateWindowAt36( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long flushBucketAt37( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long markWindowAt38( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long flushRecordAt39( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanShardAt40( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long flushRecordAt41( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long mergeBufferAt42( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long indexLaneAt43( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long packWindowAt44( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long markShardAt45( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanCursorAt46( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long mergeSlotAt47( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long loadSlotAt48( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long markRecordAt49( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateBufferAt50( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long packWindowAt51( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitPageAt52( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitShardAt53( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long loadRecordAt54( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long mergeFrameAt55( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long loadSlotAt56( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitSlotAt57( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long storeRecordAt58( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probeBatchAt59( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitPageAt60( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probePageAt61( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitRecordAt62( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitPageAt63( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitLaneAt64( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long loadSegmentAt65( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanWindowAt66( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitChunkAt67( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long indexNodeAt68( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long flushCursorAt69( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long sampleShardAt70( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long storeSlotAt71( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long alignShardAt72( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probePageAt73( long base, int offset )
    {
        long shifted = base + offset * 2;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long splitNodeAt74( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long scanBufferAt75( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long sampleBatchAt76( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long probeLaneAt77( long base, int offset )
    {
        long shifted = base + offset * 4;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long rotateTrackAt78( long base, int offset )
    {
        long shifted = base + offset * 8;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private long sampleBufferAt79( long base, int offset )
    {
        long shifted = base + offset * 16;
        if ( shifted < 0 )
        {
            shifted = -shifted;
        }
        return shifted;
    }

    private int padField80 = 80;
    private int padField81 = 81;
    private int padField82 = 82;
    private int padField83 = 83;
    private int padField84 = 84;
    private int padField85 = 85;
    private int padField86 = 86;
    private long changeMask( boolean dense )
    {
        return dense ? denseBits : sparseBits;
    }

    public void visitChangedNodes( NodeChangeVisitor visitor, int nodeTypes )
    {
        long denseMask = changeMask( true );
        long sparseMask = changeMask( false );
        visitor.visit( denseMask, nodeTypes );
        visitor.visit( sparseMask, nodeTypes );
    }

    private long visitAll( NodeChangeVisitor visitor )
    {
        long mask = changeMask( true );
        visitor.visit( mask, 0 );
        return mask;
    }
}
