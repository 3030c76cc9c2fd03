// storage helper for segment records
class SegmentQueue25
{
    @Capacity(limit=32, grow=2)
    private int shardSize = 3;

    private long segmentMask = -1;

    public int mergeShard( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + shardSize;
    }

    public long markSegment( boolean dense, int count )
    {
        long mask = segmentMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return mask * 2;
    }

    public int splitAll( int[] values, int limit )
    {
        int acc = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            acc = acc + values[i];
        }
        if ( acc < 0 )
        {
            acc = -2;
        }
        return acc;
    }

    public int relay( Visitor visitor, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        visitor.visit( picked, rounds );
        refresh( visitor, true );
        this.shardSize = picked;
        return this.shardSize;
    }

    public void refresh( Visitor visitor, boolean dense )
    {
        int mark = dense ? this.shardSize : -1;
        visitor.visit( mark, 0 );
        visitor.accept( false );
    }

    @Source(kind="segment", retries=2)
    public String describe( String label, double ratio )
    {
        double scaled = (double) shardSize * ratio;
        long wide = (long) scaled;
        return label + "#" + wide.toString();
    }
}
